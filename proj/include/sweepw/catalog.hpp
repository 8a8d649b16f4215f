#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace sweepw {

// A named maritime search object. One scalar serves as both height and
// width, in whole metres.
struct SearchObject {
    std::string name;
    int size_m = 1;

    bool operator==(const SearchObject&) const = default;
};

// Ordered object list with unique, non-empty names. Immutable once built.
class Catalog {
public:
    Catalog() = default;
    explicit Catalog(std::vector<SearchObject> objects);  // throws ConfigError on bad entries

    const std::vector<SearchObject>& objects() const { return objects_; }
    const SearchObject* find(std::string_view name) const;
    std::size_t size() const { return objects_.size(); }
    bool empty() const { return objects_.empty(); }

    bool operator==(const Catalog&) const = default;

private:
    std::vector<SearchObject> objects_;
};

// The built-in object set: 17 entries covering rafts, power boats, sail
// boats and ships from 1 m to 92 m.
Catalog default_catalog();

// Reads an objects CSV (header "name,size_m", one object per row). Throws
// ParseError naming the offending line; appends non-fatal notes to *warnings
// when a sink is given.
Catalog load_catalog(std::istream& in, std::vector<std::string>* warnings = nullptr);

void save_catalog(const Catalog& catalog, std::ostream& out);

}  // namespace sweepw
