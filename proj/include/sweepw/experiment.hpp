#pragma once

#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "sweepw/catalog.hpp"
#include "sweepw/geometry.hpp"
#include "sweepw/sensor.hpp"

namespace sweepw {

enum class RunMode {
    kMonteCarlo,  // one random placement per row
    kExhaustive,  // one placement at every column
};

const char* to_string(RunMode mode);                 // "mc" / "exhaustive"
RunMode run_mode_from_string(std::string_view s);    // throws ParseError

// Grid and sampling parameters for one lateral range experiment. Columns are
// one metre wide; column i sits i metres off the sensor track.
struct ExperimentConfig {
    std::int64_t rows = 600000;  // placements in monte-carlo mode, ignored otherwise
    int columns = 54200;
    std::uint64_t seed = 42;
    RunMode mode = RunMode::kExhaustive;

    void validate() const;  // throws ConfigError
};

// One (object, altitude, visibility) combination with its derived horizon.
struct Scenario {
    SearchObject object;
    int altitude_m = 0;
    double visibility_km = 0.0;
    double horizon_km = 0.0;

    // The eye looks down on the object's top face.
    double effective_altitude_m() const { return static_cast<double>(altitude_m - object.size_m); }

    bool operator==(const Scenario&) const = default;
};

// Validates altitude > object size and fills in the horizon distance.
Scenario make_scenario(SearchObject object, int altitude_m, double visibility_km);

// Per-column tally of detections versus opportunities.
struct ColumnStats {
    std::int64_t detected = 0;
    std::int64_t opportunities = 0;
    double fraction = 0.0;  // detected / opportunities

    bool operator==(const ColumnStats&) const = default;
};

// Column position in metres -> tally. Keys are exactly the columns that
// received at least one opportunity.
using DetectionData = std::map<int, ColumnStats>;

// One uniformly random column in [1, columns] per row, from the stream
// seeded by cfg.seed. Requires monte-carlo mode.
std::vector<int> place_objects(const ExperimentConfig& cfg);

// Sensor verdict gated by sight geometry: false past the horizon; at
// visibilities below the unlimited threshold, false past the visibility
// range; otherwise the sensor decides at effective altitude.
bool gated_detect(const Sensor& sensor, const Scenario& scenario, int lateral_m,
                  double unlimited_visibility_km = kUnlimitedVisibilityKm);

// Runs the lateral range experiment and accumulates per-column statistics.
DetectionData run_experiment(const Sensor& sensor, const Scenario& scenario,
                             const ExperimentConfig& cfg,
                             double unlimited_visibility_km = kUnlimitedVisibilityKm);

}  // namespace sweepw
