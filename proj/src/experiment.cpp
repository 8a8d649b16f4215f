#include "sweepw/experiment.hpp"

#include <cmath>
#include <string>

#include "sweepw/errors.hpp"
#include "sweepw/rng.hpp"

namespace sweepw {

const char* to_string(RunMode mode) {
    return mode == RunMode::kMonteCarlo ? "mc" : "exhaustive";
}

RunMode run_mode_from_string(std::string_view s) {
    if (s == "mc") {
        return RunMode::kMonteCarlo;
    }
    if (s == "exhaustive") {
        return RunMode::kExhaustive;
    }
    throw ParseError("unknown run mode '" + std::string(s) + "' (expected mc or exhaustive)");
}

void ExperimentConfig::validate() const {
    if (rows < 1) {
        throw ConfigError("rows must be at least 1");
    }
    if (columns < 1) {
        throw ConfigError("columns must be at least 1");
    }
}

Scenario make_scenario(SearchObject object, int altitude_m, double visibility_km) {
    if (object.size_m < 1) {
        throw ScenarioError("object \"" + object.name + "\" size must be at least 1 m");
    }
    if (altitude_m <= object.size_m) {
        throw ScenarioError("altitude " + std::to_string(altitude_m) +
                            " m does not exceed the size of object \"" + object.name + "\" (" +
                            std::to_string(object.size_m) + " m)");
    }
    if (!std::isfinite(visibility_km) || visibility_km <= 0.0) {
        throw ScenarioError("visibility must be a positive number of kilometres");
    }
    Scenario scenario{std::move(object), altitude_m, visibility_km, 0.0};
    scenario.horizon_km = distance_to_horizon_km(static_cast<double>(altitude_m)).value;
    return scenario;
}

std::vector<int> place_objects(const ExperimentConfig& cfg) {
    cfg.validate();
    if (cfg.mode != RunMode::kMonteCarlo) {
        throw ConfigError("object placement is only defined for monte-carlo mode");
    }
    Xoshiro256 rng(cfg.seed);
    std::vector<int> positions(static_cast<std::size_t>(cfg.rows));
    for (auto& pos : positions) {
        pos = static_cast<int>(rng.uniform_1_to(static_cast<std::uint64_t>(cfg.columns)));
    }
    return positions;
}

bool gated_detect(const Sensor& sensor, const Scenario& scenario, int lateral_m,
                  double unlimited_visibility_km) {
    if (lateral_m < 1) {
        throw ConfigError("lateral position must be a positive number of metres");
    }
    const double lateral = static_cast<double>(lateral_m);
    // Nothing is seen past the horizon.
    if (lateral > scenario.horizon_km * 1000.0) {
        return false;
    }
    if (scenario.visibility_km < unlimited_visibility_km &&
        lateral > scenario.visibility_km * 1000.0) {
        return false;
    }
    return sensor.detect(scenario.effective_altitude_m(),
                         static_cast<double>(scenario.object.size_m), lateral);
}

DetectionData run_experiment(const Sensor& sensor, const Scenario& scenario,
                             const ExperimentConfig& cfg, double unlimited_visibility_km) {
    cfg.validate();
    DetectionData data;
    if (cfg.mode == RunMode::kExhaustive) {
        for (int col = 1; col <= cfg.columns; ++col) {
            const bool hit = gated_detect(sensor, scenario, col, unlimited_visibility_km);
            data.emplace_hint(data.end(), col,
                              ColumnStats{hit ? 1 : 0, 1, hit ? 1.0 : 0.0});
        }
        return data;
    }
    for (int col : place_objects(cfg)) {
        auto& stats = data[col];
        stats.opportunities += 1;
        if (gated_detect(sensor, scenario, col, unlimited_visibility_km)) {
            stats.detected += 1;
        }
    }
    for (auto& [col, stats] : data) {
        stats.fraction = static_cast<double>(stats.detected) / static_cast<double>(stats.opportunities);
    }
    return data;
}

}  // namespace sweepw
