#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sweepw/catalog.hpp"
#include "sweepw/csv.hpp"
#include "sweepw/errors.hpp"
#include "sweepw/experiment.hpp"
#include "sweepw/geometry.hpp"
#include "sweepw/report.hpp"
#include "sweepw/rng.hpp"
#include "sweepw/sensor.hpp"
#include "sweepw/sweep.hpp"

namespace {

using namespace sweepw;

struct Options {
    std::uint64_t seed = 42;
    std::int64_t rows = 600000;
    std::string mode = "exhaustive";
    double lambda_nm = 550.0;
    double pupil_mm = 5.0;
    int sea_length_m = 54200;
    std::string objects_path;
    std::string out_path;
    std::string format = "csv";
    std::string object_name;
    int altitude_m = 0;
    double visibility_km = 0.0;
    std::string model_path;
    std::string reference_path;
};

HumanEyeConfig eye_config(const Options& opt) {
    return {opt.lambda_nm * 1e-9, opt.pupil_mm * 1e-3};
}

ModelConstants model_constants(const Options& opt) {
    ModelConstants constants;
    constants.sea_length_m = opt.sea_length_m;
    return constants;
}

RunMetadata run_metadata(const Options& opt, RunMode mode) {
    RunMetadata meta;
    meta.rng = rng_algorithm_name();
    meta.seed = opt.seed;
    meta.rows = opt.rows;
    meta.mode = mode;
    meta.lambda_nm = opt.lambda_nm;
    meta.pupil_mm = opt.pupil_mm;
    meta.sea_length_m = opt.sea_length_m;
    return meta;
}

Catalog catalog_from(const Options& opt) {
    if (opt.objects_path.empty()) {
        return default_catalog();
    }
    std::ifstream in(opt.objects_path);
    if (!in) {
        throw Error("cannot open objects file: " + opt.objects_path);
    }
    std::vector<std::string> warnings;
    Catalog catalog = load_catalog(in, &warnings);
    for (const auto& w : warnings) {
        std::cerr << "warning: " << opt.objects_path << ": " << w << '\n';
    }
    return catalog;
}

const SearchObject& object_from(const Catalog& catalog, const std::string& name) {
    const SearchObject* obj = catalog.find(name);
    if (obj == nullptr) {
        throw Error("unknown object \"" + name + "\" (not in the active catalog)");
    }
    return *obj;
}

template <typename WriteFn>
void with_output(const std::string& path, WriteFn&& write) {
    if (path.empty()) {
        write(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot open output file: " + path);
    }
    write(out);
    out.flush();
    if (!out) {
        throw Error("failed to write output file: " + path);
    }
}

void run_sweep(const Options& opt) {
    const Catalog catalog = catalog_from(opt);
    const ModelConstants constants = model_constants(opt);
    ExperimentConfig cfg;
    cfg.rows = opt.rows;
    cfg.columns = opt.sea_length_m;
    cfg.seed = opt.seed;
    cfg.mode = run_mode_from_string(opt.mode);

    const auto results = sweep_all(catalog, constants, eye_config(opt), cfg);
    const RunMetadata meta = run_metadata(opt, cfg.mode);
    with_output(opt.out_path, [&](std::ostream& out) {
        if (opt.format == "json") {
            write_results_json(out, results, meta);
        } else {
            write_results_csv(out, results, meta);
        }
    });
}

void run_lrc(const Options& opt) {
    const Catalog catalog = catalog_from(opt);
    const ModelConstants constants = model_constants(opt);
    const Scenario scenario =
        make_scenario(object_from(catalog, opt.object_name), opt.altitude_m, opt.visibility_km);

    ExperimentConfig cfg;
    cfg.rows = opt.rows;
    cfg.columns = opt.sea_length_m;
    cfg.seed = scenario_stream_seed(opt.seed, 0);  // stream 0, as for a one-scenario sweep
    cfg.mode = run_mode_from_string(opt.mode);

    const HumanEyeSensor sensor(eye_config(opt));
    const DetectionData data =
        run_experiment(sensor, scenario, cfg, constants.unlimited_visibility_km);
    const RunMetadata meta = run_metadata(opt, cfg.mode);
    with_output(opt.out_path, [&](std::ostream& out) {
        write_lrc_csv(out, data, cfg.columns, scenario, meta);
    });
}

void run_oracle(const Options& opt) {
    const Catalog catalog = catalog_from(opt);
    const Scenario scenario =
        make_scenario(object_from(catalog, opt.object_name), opt.altitude_m, opt.visibility_km);
    const double w_km =
        analytic_sweep_width_km(eye_config(opt), scenario, model_constants(opt));
    std::cout << csv::format_double(w_km) << '\n';
}

std::vector<SweepWidthResult> load_model_results(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open model results file: " + path);
    }
    if (path.ends_with(".json")) {
        return load_results_json(in);
    }
    return load_results_csv(in);
}

void run_compare(const Options& opt) {
    const auto model = load_model_results(opt.model_path);

    std::set<std::string> names;
    for (const auto& r : model) {
        names.insert(r.scenario.object.name);
    }
    std::ifstream ref_in(opt.reference_path);
    if (!ref_in) {
        throw Error("cannot open reference table: " + opt.reference_path);
    }
    std::vector<std::string> warnings;
    const ReferenceTable reference = load_reference_table(
        ref_in, std::vector<std::string>(names.begin(), names.end()), &warnings);
    for (const auto& w : warnings) {
        std::cerr << "warning: " << opt.reference_path << ": " << w << '\n';
    }

    const ComparisonReport report = compare_tables(model, reference);
    with_output(opt.out_path, [&](std::ostream& out) { write_comparison_csv(out, report); });
    if (!opt.out_path.empty()) {
        std::cout << "compared " << report.cells_compared << " cells; MAPE "
                  << csv::format_double(report.mape_percent) << "%; ratio range ["
                  << csv::format_double(report.min_ratio) << ", "
                  << csv::format_double(report.max_ratio) << "]; missing in reference "
                  << report.missing_in_reference << ", in model " << report.missing_in_model
                  << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Effective sweep width simulator for visual search at sea"};
    app.require_subcommand(1);
    Options opt;

    const auto add_run_flags = [&](CLI::App* cmd) {
        cmd->add_option("--seed", opt.seed, "Master RNG seed")->capture_default_str();
        cmd->add_option("--rows", opt.rows,
                        "Detection opportunities per scenario (monte-carlo mode)")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd->add_option("--mode", opt.mode, "Placement mode")
            ->check(CLI::IsMember({"mc", "exhaustive"}))
            ->capture_default_str();
    };
    const auto add_model_flags = [&](CLI::App* cmd) {
        cmd->add_option("--lambda-nm", opt.lambda_nm, "Wavelength of visible light, nanometres")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd->add_option("--pupil-mm", opt.pupil_mm, "Pupil diameter, millimetres")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd->add_option("--sea-length-m", opt.sea_length_m,
                        "Sea length (lateral grid extent), metres")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd->add_option("--objects", opt.objects_path,
                        "Objects CSV (name,size_m); default: built-in catalog");
    };
    const auto add_scenario_flags = [&](CLI::App* cmd) {
        cmd->add_option("--object", opt.object_name, "Object name from the active catalog")
            ->required();
        cmd->add_option("--alt", opt.altitude_m, "Sensor altitude, metres")
            ->check(CLI::PositiveNumber)
            ->required();
        cmd->add_option("--vis", opt.visibility_km, "Visibility, kilometres")
            ->check(CLI::PositiveNumber)
            ->required();
    };

    auto* sweep_cmd =
        app.add_subcommand("sweep", "Run the full object x altitude x visibility sweep");
    add_run_flags(sweep_cmd);
    add_model_flags(sweep_cmd);
    sweep_cmd->add_option("--out", opt.out_path, "Output path (default: stdout)");
    sweep_cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    auto* lrc_cmd =
        app.add_subcommand("lrc", "Export the lateral range curve for one scenario");
    add_scenario_flags(lrc_cmd);
    add_run_flags(lrc_cmd);
    add_model_flags(lrc_cmd);
    lrc_cmd->add_option("--out", opt.out_path, "Output path (default: stdout)");

    auto* oracle_cmd =
        app.add_subcommand("oracle", "Print the closed-form W for one scenario, in km");
    add_scenario_flags(oracle_cmd);
    add_model_flags(oracle_cmd);

    auto* compare_cmd =
        app.add_subcommand("compare", "Compare a results file against a reference W table");
    compare_cmd->add_option("--model", opt.model_path, "Model results file (csv or json)")
        ->required();
    compare_cmd->add_option("--reference", opt.reference_path, "Reference W table (csv)")
        ->required();
    compare_cmd->add_option("--out", opt.out_path, "Report path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (sweep_cmd->parsed()) {
            run_sweep(opt);
        } else if (lrc_cmd->parsed()) {
            run_lrc(opt);
        } else if (oracle_cmd->parsed()) {
            run_oracle(opt);
        } else if (compare_cmd->parsed()) {
            run_compare(opt);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
