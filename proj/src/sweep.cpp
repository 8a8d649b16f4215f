#include "sweepw/sweep.hpp"

#include <algorithm>
#include <cmath>

#include "sweepw/errors.hpp"
#include "sweepw/rng.hpp"

namespace sweepw {

double calculate_sweep_width_km(const DetectionData& data) {
    double width_m = 0.0;
    for (const auto& [col, stats] : data) {
        width_m += stats.fraction;
    }
    // Right half only was simulated; the curve is assumed symmetrical.
    return 2.0 * (width_m / 1000.0);
}

double analytic_sweep_width_km(const HumanEyeConfig& eye, const Scenario& scenario,
                               const ModelConstants& constants) {
    const double theta = angular_resolution_rad(eye);
    const double eff_alt = scenario.effective_altitude_m();

    // Farthest lateral position where the object still spans theta.
    const double max_slant_m = static_cast<double>(scenario.object.size_m) / theta;
    const double lateral_sq = max_slant_m * max_slant_m - eff_alt * eff_alt;
    const double resolution_cutoff_m = lateral_sq > 0.0 ? std::sqrt(lateral_sq) : 0.0;

    double cutoff_m = std::min(static_cast<double>(constants.sea_length_m),
                               std::floor(scenario.horizon_km * 1000.0));
    cutoff_m = std::min(cutoff_m, std::floor(resolution_cutoff_m));
    if (scenario.visibility_km < constants.unlimited_visibility_km) {
        cutoff_m = std::min(cutoff_m, std::floor(scenario.visibility_km * 1000.0));
    }
    return 2.0 * (cutoff_m / 1000.0);
}

std::vector<SweepWidthResult> sweep_all(const Catalog& catalog, const ModelConstants& constants,
                                        const HumanEyeConfig& eye, const ExperimentConfig& cfg) {
    constants.validate();
    cfg.validate();
    for (const auto& obj : catalog.objects()) {
        for (int alt : constants.altitudes_m) {
            if (alt <= obj.size_m) {
                throw ScenarioError("altitude " + std::to_string(alt) +
                                    " m does not exceed the size of object \"" + obj.name +
                                    "\" (" + std::to_string(obj.size_m) + " m)");
            }
        }
    }

    const HumanEyeSensor sensor(eye);
    std::vector<SweepWidthResult> results;
    results.reserve(catalog.size() * constants.altitudes_m.size() * constants.visibilities_km.size());
    std::uint64_t scenario_index = 0;
    for (const auto& obj : catalog.objects()) {
        for (int alt : constants.altitudes_m) {
            for (double vis : constants.visibilities_km) {
                const Scenario scenario = make_scenario(obj, alt, vis);
                ExperimentConfig run_cfg = cfg;
                run_cfg.seed = scenario_stream_seed(cfg.seed, scenario_index);
                const DetectionData data =
                    run_experiment(sensor, scenario, run_cfg, constants.unlimited_visibility_km);

                SweepWidthResult result;
                result.scenario = scenario;
                result.w_km = calculate_sweep_width_km(data);
                result.coverage_fraction =
                    static_cast<double>(data.size()) / static_cast<double>(run_cfg.columns);
                result.mode = cfg.mode;
                result.seed = cfg.seed;
                result.rows = cfg.mode == RunMode::kExhaustive ? run_cfg.columns : cfg.rows;
                results.push_back(std::move(result));
                ++scenario_index;
            }
        }
    }
    return results;
}

LateralRangeCurve lrc_of(const DetectionData& data, int columns) {
    if (columns < 1) {
        throw ConfigError("columns must be at least 1");
    }
    if (!data.empty() && (data.begin()->first < 1 || data.rbegin()->first > columns)) {
        throw ConfigError("detection data has column positions outside [1, columns]");
    }
    LateralRangeCurve curve;
    curve.reserve(static_cast<std::size_t>(columns));
    auto it = data.begin();
    for (int x = 1; x <= columns; ++x) {
        if (it != data.end() && it->first == x) {
            curve.push_back({x, it->second.fraction, true});
            ++it;
        } else {
            curve.push_back({x, 0.0, false});
        }
    }
    return curve;
}

}  // namespace sweepw
