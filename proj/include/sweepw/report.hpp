#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "sweepw/experiment.hpp"
#include "sweepw/sweep.hpp"

namespace sweepw {

// Run parameters echoed into output headers. Deliberately free of
// timestamps or host details so identical runs emit identical bytes.
struct RunMetadata {
    std::string rng;
    std::uint64_t seed = 42;
    std::int64_t rows = 600000;
    RunMode mode = RunMode::kExhaustive;
    double lambda_nm = 550.0;
    double pupil_mm = 5.0;
    int sea_length_m = 54200;
};

// Results files: header object,altitude_m,visibility_km,w_km,
// coverage_fraction,mode,seed,rows; one row per scenario in sweep order.
void write_results_csv(std::ostream& out, const std::vector<SweepWidthResult>& results,
                       const RunMetadata& meta);
void write_results_json(std::ostream& out, const std::vector<SweepWidthResult>& results,
                        const RunMetadata& meta);

// Loaders reconstruct exactly the emitted fields; object size and horizon
// are not part of the file format and stay at their defaults.
std::vector<SweepWidthResult> load_results_csv(std::istream& in);
std::vector<SweepWidthResult> load_results_json(std::istream& in);

// Lateral range curve / detection data export: one row per column,
// header x_m,detected,opportunities,fraction, ascending x. Columns without
// opportunities show opportunities=0.
void write_lrc_csv(std::ostream& out, const DetectionData& data, int columns,
                   const Scenario& scenario, const RunMetadata& meta);

// Reads back the observed columns of an LRC export (rows with opportunities).
DetectionData load_lrc_csv(std::istream& in);

struct ReferenceKey {
    std::string object;
    int altitude_m = 0;
    double visibility_km = 0.0;

    auto operator<=>(const ReferenceKey&) const = default;
};

// User-supplied W table: (object, altitude, visibility) -> W in km.
using ReferenceTable = std::map<ReferenceKey, double>;

// Reads a reference W table (required columns object,altitude_m,
// visibility_km,w_km; extra columns ignored, so a results file qualifies).
// Object names not in known_objects produce a warning, not an error.
ReferenceTable load_reference_table(std::istream& in,
                                    const std::vector<std::string>& known_objects = {},
                                    std::vector<std::string>* warnings = nullptr);

struct ComparisonCell {
    ReferenceKey key;
    double model_w_km = 0.0;
    double reference_w_km = 0.0;
    double abs_error_km = 0.0;
    double ratio = 0.0;  // model / reference
};

struct ComparisonReport {
    std::vector<ComparisonCell> cells;    // keys present on both sides, in model order
    double mape_percent = 0.0;            // mean |model-ref|/ref over compared cells
    double min_ratio = 0.0;
    double max_ratio = 0.0;
    int cells_compared = 0;
    int missing_in_reference = 0;         // model keys absent from the reference
    int missing_in_model = 0;             // reference keys absent from the model
};

// Joins on (object, altitude, visibility). Cells missing from either side
// are counted, never fabricated.
ComparisonReport compare_tables(const std::vector<SweepWidthResult>& model,
                                const ReferenceTable& reference);

void write_comparison_csv(std::ostream& out, const ComparisonReport& report);

// Reads back an emitted comparison report, including the summary footers.
ComparisonReport load_comparison_csv(std::istream& in);

}  // namespace sweepw
