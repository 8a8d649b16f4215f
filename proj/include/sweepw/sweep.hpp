#pragma once

#include <cstdint>
#include <vector>

#include "sweepw/catalog.hpp"
#include "sweepw/experiment.hpp"
#include "sweepw/geometry.hpp"
#include "sweepw/sensor.hpp"

namespace sweepw {

struct LrcPoint {
    int x_m = 0;
    double fraction = 0.0;
    bool observed = false;  // column received at least one opportunity

    bool operator==(const LrcPoint&) const = default;
};

// Right-half lateral range curve, one point per one-metre column.
using LateralRangeCurve = std::vector<LrcPoint>;

struct SweepWidthResult {
    Scenario scenario;
    double w_km = 0.0;
    double coverage_fraction = 0.0;  // distinct placed columns / columns
    RunMode mode = RunMode::kExhaustive;
    std::uint64_t seed = 0;          // master seed of the run
    std::int64_t rows = 0;           // detection opportunities performed
};

// Effective sweep width from detection data: per-column detected fractions
// summed at one metre per column, converted to kilometres, and doubled for
// the mirrored left half of the curve.
double calculate_sweep_width_km(const DetectionData& data);

// Closed-form W for the deterministic sensor. The detectable columns form
// the prefix interval up to the tightest of the sea edge, the horizon, the
// visibility range and the resolution cutoff; an exhaustive experiment over
// the same grid must agree to within one column (0.002 km).
double analytic_sweep_width_km(const HumanEyeConfig& eye, const Scenario& scenario,
                               const ModelConstants& constants);

// Runs every (object, altitude, visibility) combination, objects outermost,
// then altitudes, then visibilities. Each scenario draws from its own RNG
// stream derived from cfg.seed, so any subset reproduces the full run.
std::vector<SweepWidthResult> sweep_all(const Catalog& catalog, const ModelConstants& constants,
                                        const HumanEyeConfig& eye, const ExperimentConfig& cfg);

// Densifies detection data to one point per column in [1, columns]; columns
// with no opportunities get fraction 0 and are marked unobserved.
LateralRangeCurve lrc_of(const DetectionData& data, int columns);

}  // namespace sweepw
