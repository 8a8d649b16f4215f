#include <cmath>
#include <set>

#include "doctest.h"
#include "sweepw/errors.hpp"
#include "sweepw/experiment.hpp"
#include "sweepw/rng.hpp"
#include "sweepw/sensor.hpp"

using namespace sweepw;

namespace {

ExperimentConfig mc_config(std::int64_t rows, int columns, std::uint64_t seed) {
    ExperimentConfig cfg;
    cfg.rows = rows;
    cfg.columns = columns;
    cfg.seed = seed;
    cfg.mode = RunMode::kMonteCarlo;
    return cfg;
}

ExperimentConfig exhaustive_config(int columns) {
    ExperimentConfig cfg;
    cfg.columns = columns;
    cfg.mode = RunMode::kExhaustive;
    return cfg;
}

}  // namespace

TEST_CASE("run mode names round-trip") {
    CHECK(run_mode_from_string(to_string(RunMode::kMonteCarlo)) == RunMode::kMonteCarlo);
    CHECK(run_mode_from_string(to_string(RunMode::kExhaustive)) == RunMode::kExhaustive);
    CHECK_THROWS_AS(run_mode_from_string("montecarlo"), ParseError);
}

TEST_CASE("scenario construction derives the horizon and validates inputs") {
    const Scenario scenario = make_scenario({"Raft 1-person", 1}, 150, 1.9);
    CHECK(scenario.effective_altitude_m() == 149.0);
    CHECK(std::abs(scenario.horizon_km - 46.908) <= 0.001);

    CHECK_THROWS_WITH_AS(make_scenario({"Ship 92", 92}, 92, 1.9), doctest::Contains("Ship 92"),
                         ScenarioError);
    CHECK_THROWS_AS(make_scenario({"Raft 1-person", 1}, 150, 0.0), ScenarioError);
    CHECK_THROWS_AS(make_scenario({"Raft 1-person", 1}, 150, -1.9), ScenarioError);
}

TEST_CASE("placement is deterministic under a fixed seed") {
    const auto cfg = mc_config(5, 10, 1234);
    CHECK(place_objects(cfg) == place_objects(cfg));

    auto other = cfg;
    other.seed = 1235;
    CHECK(place_objects(cfg) != place_objects(other));
}

TEST_CASE("placement stays inside the column range") {
    const auto positions = place_objects(mc_config(10000, 7, 99));
    CHECK(positions.size() == 10000);
    for (int pos : positions) {
        CHECK(pos >= 1);
        CHECK(pos <= 7);
    }
}

TEST_CASE("placement occupancy is uniform within five sigma") {
    const std::int64_t rows = 200000;
    const int columns = 10;
    // binomial model: each column receives rows/columns hits on average
    const double expected = static_cast<double>(rows) / columns;
    const double sigma = std::sqrt(rows * (1.0 / columns) * (1.0 - 1.0 / columns));
    for (const std::uint64_t seed : {1ull, 42ull, 31337ull}) {
        std::vector<std::int64_t> occupancy(columns + 1, 0);
        for (int pos : place_objects(mc_config(rows, columns, seed))) {
            ++occupancy[pos];
        }
        for (int col = 1; col <= columns; ++col) {
            CHECK(std::abs(occupancy[col] - expected) <= 5.0 * sigma);
        }
    }
}

TEST_CASE("placement requires monte-carlo mode") {
    CHECK_THROWS_AS(place_objects(exhaustive_config(10)), ConfigError);
}

TEST_CASE("gated detection honours horizon, visibility and the sensor") {
    const HumanEyeSensor sensor;

    SUBCASE("nothing is seen past the horizon") {
        const Scenario scenario = make_scenario({"Raft 1-person", 1}, 150, 37.0);
        CHECK_FALSE(gated_detect(sensor, scenario, 50000));  // horizon is ~46908 m
    }
    SUBCASE("the visibility gate cuts off beyond the visibility range") {
        const Scenario scenario = make_scenario({"Raft 1-person", 1}, 150, 1.9);
        CHECK(gated_detect(sensor, scenario, 1900));
        CHECK_FALSE(gated_detect(sensor, scenario, 1901));
    }
    SUBCASE("unlimited visibility leaves only horizon and resolution") {
        const Scenario scenario = make_scenario({"Raft 1-person", 1}, 150, 37.0);
        CHECK(gated_detect(sensor, scenario, 7000));
        CHECK_FALSE(gated_detect(sensor, scenario, 7451));  // resolution cutoff is 7450 m
    }
    SUBCASE("a large object is seen all the way to the horizon gate") {
        const Scenario scenario = make_scenario({"Ship 92", 92}, 600, 37.0);
        CHECK(gated_detect(sensor, scenario, 54000));
        CHECK(gated_detect(sensor, scenario, 93815));
        CHECK_FALSE(gated_detect(sensor, scenario, 93816));
    }
    SUBCASE("lateral position must be positive") {
        const Scenario scenario = make_scenario({"Raft 1-person", 1}, 150, 1.9);
        CHECK_THROWS_AS(gated_detect(sensor, scenario, 0), ConfigError);
    }
}

TEST_CASE("exhaustive run produces the step curve cut at the visibility range") {
    const HumanEyeSensor sensor;
    const Scenario scenario = make_scenario({"Raft 1-person", 1}, 150, 1.9);
    ExperimentConfig cfg = exhaustive_config(54200);

    const DetectionData data = run_experiment(sensor, scenario, cfg);
    REQUIRE(data.size() == 54200);
    double total_fraction = 0.0;
    for (const auto& [col, stats] : data) {
        CHECK(stats.opportunities == 1);
        CHECK(stats.fraction == (col <= 1900 ? 1.0 : 0.0));
        total_fraction += stats.fraction;
    }
    CHECK(total_fraction == 1900.0);
}

TEST_CASE("exhaustive data is independent of the seed") {
    const HumanEyeSensor sensor;
    const Scenario scenario = make_scenario({"Buoy", 2}, 150, 0.5);
    ExperimentConfig a = exhaustive_config(800);
    ExperimentConfig b = exhaustive_config(800);
    a.seed = 1;
    b.seed = 999;
    CHECK(run_experiment(sensor, scenario, a) == run_experiment(sensor, scenario, b));
}

TEST_CASE("a single monte-carlo row yields a single opportunity") {
    const HumanEyeSensor sensor;
    const Scenario scenario = make_scenario({"Raft 1-person", 1}, 150, 1.9);
    const DetectionData data = run_experiment(sensor, scenario, mc_config(1, 54200, 5));
    REQUIRE(data.size() == 1);
    CHECK(data.begin()->second.opportunities == 1);
}

TEST_CASE("monte-carlo runs are reproducible and conserve opportunities") {
    const HumanEyeSensor sensor;
    const Scenario scenario = make_scenario({"Buoy", 2}, 150, 0.5);
    const auto cfg = mc_config(5000, 800, 2024);

    const DetectionData data = run_experiment(sensor, scenario, cfg);
    CHECK(data == run_experiment(sensor, scenario, cfg));

    std::int64_t opportunities = 0;
    for (const auto& [col, stats] : data) {
        CHECK(col >= 1);
        CHECK(col <= 800);
        CHECK(stats.detected <= stats.opportunities);
        // deterministic sensor: every fraction is all-or-nothing
        CHECK((stats.fraction == 0.0 || stats.fraction == 1.0));
        opportunities += stats.opportunities;
    }
    CHECK(opportunities == 5000);
}

TEST_CASE("detected columns form a prefix interval") {
    const HumanEyeSensor sensor;
    const Scenario scenario = make_scenario({"Buoy", 1}, 150, 0.3);
    const DetectionData data = run_experiment(sensor, scenario, exhaustive_config(500));
    bool past_cutoff = false;
    for (const auto& [col, stats] : data) {
        if (stats.fraction == 0.0) {
            past_cutoff = true;
        } else {
            CHECK_FALSE(past_cutoff);
        }
    }
    CHECK(past_cutoff);  // visibility 0.3 km cuts off inside the 500 m grid
}
