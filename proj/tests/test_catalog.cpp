#include <set>
#include <sstream>

#include "doctest.h"
#include "sweepw/catalog.hpp"
#include "sweepw/errors.hpp"
#include "sweepw/rng.hpp"

using namespace sweepw;

TEST_CASE("default catalog has the 17 built-in objects") {
    const Catalog catalog = default_catalog();
    CHECK(catalog.size() == 17);

    REQUIRE(catalog.find("Raft 1-person") != nullptr);
    CHECK(catalog.find("Raft 1-person")->size_m == 1);
    REQUIRE(catalog.find("Ship 92") != nullptr);
    CHECK(catalog.find("Ship 92")->size_m == 92);
    REQUIRE(catalog.find("Power boat 2") != nullptr);
    CHECK(catalog.find("Power boat 2")->size_m == 2);
    CHECK(catalog.find("Person 1") == nullptr);

    // ordered, with rafts first and ships last
    CHECK(catalog.objects().front().name == "Raft 1-person");
    CHECK(catalog.objects().back().name == "Ship 92");
}

TEST_CASE("default catalog is the same value on every call") {
    CHECK(default_catalog() == default_catalog());
}

TEST_CASE("default catalog sizes are distinct") {
    const Catalog catalog = default_catalog();
    std::set<int> sizes;
    for (const auto& obj : catalog.objects()) {
        CHECK(sizes.insert(obj.size_m).second);
    }
}

TEST_CASE("catalog construction validates entries") {
    CHECK_THROWS_AS(Catalog({{"", 3}}), ConfigError);
    CHECK_THROWS_AS(Catalog({{"Buoy", 0}}), ConfigError);
    CHECK_THROWS_AS(Catalog({{"Buoy", 3}, {"Buoy", 4}}), ConfigError);
}

TEST_CASE("load catalog accepts a single-row file") {
    std::istringstream in("name,size_m\nBuoy,3\n");
    const Catalog catalog = load_catalog(in);
    CHECK(catalog.size() == 1);
    REQUIRE(catalog.find("Buoy") != nullptr);
    CHECK(catalog.find("Buoy")->size_m == 3);
}

TEST_CASE("load catalog rejects bad rows with the line number") {
    SUBCASE("non-positive size") {
        std::istringstream in("name,size_m\nBuoy,0\n");
        CHECK_THROWS_WITH_AS(load_catalog(in), doctest::Contains("line 2"), ParseError);
    }
    SUBCASE("missing field") {
        std::istringstream in("name,size_m\nBuoy\n");
        CHECK_THROWS_WITH_AS(load_catalog(in), doctest::Contains("line 2"), ParseError);
    }
    SUBCASE("non-numeric size") {
        std::istringstream in("name,size_m\nBuoy,big\n");
        CHECK_THROWS_AS(load_catalog(in), ParseError);
    }
    SUBCASE("duplicate name") {
        std::istringstream in("name,size_m\nBuoy,3\nBuoy,4\n");
        CHECK_THROWS_WITH_AS(load_catalog(in), doctest::Contains("line 3"), ParseError);
    }
    SUBCASE("bad header") {
        std::istringstream in("label,metres\nBuoy,3\n");
        CHECK_THROWS_AS(load_catalog(in), ParseError);
    }
}

TEST_CASE("empty objects file yields an empty catalog and a warning") {
    std::istringstream in("");
    std::vector<std::string> warnings;
    const Catalog catalog = load_catalog(in, &warnings);
    CHECK(catalog.empty());
    CHECK(warnings.size() == 1);
}

TEST_CASE("comments and blank lines are skipped") {
    std::istringstream in("# a note\n\nname,size_m\n# another\nBuoy,3\n");
    CHECK(load_catalog(in).size() == 1);
}

TEST_CASE("save then load returns the same catalog") {
    Xoshiro256 rng(808);
    for (int round = 0; round < 50; ++round) {
        std::vector<SearchObject> objects;
        const int n = static_cast<int>(rng.uniform_1_to(20));
        for (int i = 0; i < n; ++i) {
            objects.push_back({"Object " + std::to_string(i) + "-" +
                                   std::to_string(rng.uniform_1_to(1000)),
                               static_cast<int>(rng.uniform_1_to(500))});
        }
        const Catalog catalog(std::move(objects));
        std::stringstream buffer;
        save_catalog(catalog, buffer);
        CHECK(load_catalog(buffer) == catalog);
    }
}
