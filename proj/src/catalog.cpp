#include "sweepw/catalog.hpp"

#include <istream>
#include <ostream>
#include <set>

#include "sweepw/csv.hpp"
#include "sweepw/errors.hpp"

namespace sweepw {

Catalog::Catalog(std::vector<SearchObject> objects) : objects_(std::move(objects)) {
    std::set<std::string_view> names;
    for (const auto& obj : objects_) {
        if (obj.name.empty()) {
            throw ConfigError("object name must not be empty");
        }
        if (obj.size_m < 1) {
            throw ConfigError("object \"" + obj.name + "\" size must be at least 1 m");
        }
        if (!names.insert(obj.name).second) {
            throw ConfigError("duplicate object name \"" + obj.name + "\"");
        }
    }
}

const SearchObject* Catalog::find(std::string_view name) const {
    for (const auto& obj : objects_) {
        if (obj.name == name) {
            return &obj;
        }
    }
    return nullptr;
}

Catalog default_catalog() {
    return Catalog({
        {"Raft 1-person", 1},
        {"Raft 4-person", 4},
        {"Raft 6-person", 6},
        {"Raft 8-person", 8},
        {"Raft 10-person", 10},
        {"Raft 15-person", 15},
        {"Raft 20-person", 20},
        {"Raft 25-person", 25},
        {"Power boat 2", 2},
        {"Power boat 16", 16},
        {"Power boat 24", 24},
        {"Sail boat 5", 5},
        {"Sail boat 12", 12},
        {"Sail boat 21", 21},
        {"Ship 37", 37},
        {"Ship 69", 69},
        {"Ship 92", 92},
    });
}

Catalog load_catalog(std::istream& in, std::vector<std::string>* warnings) {
    std::string line;
    int line_no = 0;
    if (!csv::next_data_line(in, line, line_no)) {
        if (warnings != nullptr) {
            warnings->push_back("objects file is empty; catalog has no entries");
        }
        return {};
    }
    const auto header = csv::split(line);
    csv::header_index(header, {"name", "size_m"}, line_no);
    const auto columns = csv::header_index(header, {}, line_no);
    const auto name_col = columns.at("name");
    const auto size_col = columns.at("size_m");

    std::vector<SearchObject> objects;
    std::set<std::string> seen;
    while (csv::next_data_line(in, line, line_no)) {
        const auto fields = csv::split(line);
        if (fields.size() != header.size()) {
            throw ParseError(line_no, "expected " + std::to_string(header.size()) +
                                          " fields, got " + std::to_string(fields.size()));
        }
        const auto& name = fields[name_col];
        if (name.empty()) {
            throw ParseError(line_no, "object name must not be empty");
        }
        const auto size = csv::parse_int(fields[size_col]);
        if (!size) {
            throw ParseError(line_no, "object size is not an integer: '" + fields[size_col] + "'");
        }
        if (*size < 1) {
            throw ParseError(line_no, "object size must be a positive number of metres");
        }
        if (!seen.insert(name).second) {
            throw ParseError(line_no, "duplicate object name \"" + name + "\"");
        }
        objects.push_back({name, static_cast<int>(*size)});
    }
    if (objects.empty() && warnings != nullptr) {
        warnings->push_back("objects file has a header but no rows; catalog has no entries");
    }
    return Catalog(std::move(objects));
}

void save_catalog(const Catalog& catalog, std::ostream& out) {
    out << "name,size_m\n";
    for (const auto& obj : catalog.objects()) {
        out << obj.name << ',' << obj.size_m << '\n';
    }
}

}  // namespace sweepw
