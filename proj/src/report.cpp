#include "sweepw/report.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "sweepw/csv.hpp"
#include "sweepw/errors.hpp"

namespace sweepw {

namespace {

void write_run_metadata(std::ostream& out, const RunMetadata& meta) {
    out << "# rng=" << meta.rng << " seed=" << meta.seed << " rows=" << meta.rows
        << " mode=" << to_string(meta.mode) << " lambda_nm=" << csv::format_double(meta.lambda_nm)
        << " pupil_mm=" << csv::format_double(meta.pupil_mm)
        << " sea_length_m=" << meta.sea_length_m << '\n';
}

nlohmann::ordered_json metadata_json(const RunMetadata& meta) {
    return {
        {"rng", meta.rng},
        {"seed", meta.seed},
        {"rows", meta.rows},
        {"mode", to_string(meta.mode)},
        {"lambda_nm", meta.lambda_nm},
        {"pupil_mm", meta.pupil_mm},
        {"sea_length_m", meta.sea_length_m},
    };
}

}  // namespace

void write_results_csv(std::ostream& out, const std::vector<SweepWidthResult>& results,
                       const RunMetadata& meta) {
    out << "# sweepw results\n";
    write_run_metadata(out, meta);
    out << "object,altitude_m,visibility_km,w_km,coverage_fraction,mode,seed,rows\n";
    for (const auto& r : results) {
        out << r.scenario.object.name << ',' << r.scenario.altitude_m << ','
            << csv::format_double(r.scenario.visibility_km) << ',' << csv::format_double(r.w_km)
            << ',' << csv::format_double(r.coverage_fraction) << ',' << to_string(r.mode) << ','
            << r.seed << ',' << r.rows << '\n';
    }
}

void write_results_json(std::ostream& out, const std::vector<SweepWidthResult>& results,
                        const RunMetadata& meta) {
    nlohmann::ordered_json doc;
    doc["metadata"] = metadata_json(meta);
    auto& rows = doc["results"] = nlohmann::ordered_json::array();
    for (const auto& r : results) {
        rows.push_back({
            {"object", r.scenario.object.name},
            {"altitude_m", r.scenario.altitude_m},
            {"visibility_km", r.scenario.visibility_km},
            {"w_km", r.w_km},
            {"coverage_fraction", r.coverage_fraction},
            {"mode", to_string(r.mode)},
            {"seed", r.seed},
            {"rows", r.rows},
        });
    }
    out << doc.dump(2) << '\n';
}

std::vector<SweepWidthResult> load_results_csv(std::istream& in) {
    std::string line;
    int line_no = 0;
    if (!csv::next_data_line(in, line, line_no)) {
        throw ParseError("results file has no header");
    }
    const auto header = csv::split(line);
    const auto columns = csv::header_index(
        header,
        {"object", "altitude_m", "visibility_km", "w_km", "coverage_fraction", "mode", "seed",
         "rows"},
        line_no);

    std::vector<SweepWidthResult> results;
    while (csv::next_data_line(in, line, line_no)) {
        const auto fields = csv::split(line);
        if (fields.size() != header.size()) {
            throw ParseError(line_no, "expected " + std::to_string(header.size()) +
                                          " fields, got " + std::to_string(fields.size()));
        }
        SweepWidthResult r;
        r.scenario.object.name = fields[columns.at("object")];
        if (r.scenario.object.name.empty()) {
            throw ParseError(line_no, "object name must not be empty");
        }
        const auto altitude = csv::parse_int(fields[columns.at("altitude_m")]);
        const auto visibility = csv::parse_double(fields[columns.at("visibility_km")]);
        const auto w = csv::parse_double(fields[columns.at("w_km")]);
        const auto coverage = csv::parse_double(fields[columns.at("coverage_fraction")]);
        const auto seed = csv::parse_uint(fields[columns.at("seed")]);
        const auto rows = csv::parse_int(fields[columns.at("rows")]);
        if (!altitude || !visibility || !w || !coverage || !seed || !rows) {
            throw ParseError(line_no, "malformed numeric field");
        }
        r.scenario.altitude_m = static_cast<int>(*altitude);
        r.scenario.visibility_km = *visibility;
        r.w_km = *w;
        r.coverage_fraction = *coverage;
        r.mode = run_mode_from_string(fields[columns.at("mode")]);
        r.seed = *seed;
        r.rows = *rows;
        results.push_back(std::move(r));
    }
    return results;
}

std::vector<SweepWidthResult> load_results_json(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.contains("results") || !doc["results"].is_array()) {
        throw ParseError("results JSON must contain a 'results' array");
    }
    std::vector<SweepWidthResult> results;
    try {
        for (const auto& row : doc["results"]) {
            SweepWidthResult r;
            r.scenario.object.name = row.at("object").get<std::string>();
            r.scenario.altitude_m = row.at("altitude_m").get<int>();
            r.scenario.visibility_km = row.at("visibility_km").get<double>();
            r.w_km = row.at("w_km").get<double>();
            r.coverage_fraction = row.at("coverage_fraction").get<double>();
            r.mode = run_mode_from_string(row.at("mode").get<std::string>());
            r.seed = row.at("seed").get<std::uint64_t>();
            r.rows = row.at("rows").get<std::int64_t>();
            results.push_back(std::move(r));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed results JSON: ") + e.what());
    }
    return results;
}

void write_lrc_csv(std::ostream& out, const DetectionData& data, int columns,
                   const Scenario& scenario, const RunMetadata& meta) {
    out << "# sweepw lateral range curve\n";
    out << "# object=" << scenario.object.name << " altitude_m=" << scenario.altitude_m
        << " visibility_km=" << csv::format_double(scenario.visibility_km) << '\n';
    write_run_metadata(out, meta);
    out << "x_m,detected,opportunities,fraction\n";
    auto it = data.begin();
    for (int x = 1; x <= columns; ++x) {
        if (it != data.end() && it->first == x) {
            out << x << ',' << it->second.detected << ',' << it->second.opportunities << ','
                << csv::format_double(it->second.fraction) << '\n';
            ++it;
        } else {
            out << x << ",0,0,0\n";
        }
    }
}

DetectionData load_lrc_csv(std::istream& in) {
    std::string line;
    int line_no = 0;
    if (!csv::next_data_line(in, line, line_no)) {
        throw ParseError("lateral range curve file has no header");
    }
    const auto header = csv::split(line);
    const auto columns =
        csv::header_index(header, {"x_m", "detected", "opportunities", "fraction"}, line_no);

    DetectionData data;
    while (csv::next_data_line(in, line, line_no)) {
        const auto fields = csv::split(line);
        if (fields.size() != header.size()) {
            throw ParseError(line_no, "expected " + std::to_string(header.size()) +
                                          " fields, got " + std::to_string(fields.size()));
        }
        const auto x = csv::parse_int(fields[columns.at("x_m")]);
        const auto detected = csv::parse_int(fields[columns.at("detected")]);
        const auto opportunities = csv::parse_int(fields[columns.at("opportunities")]);
        const auto fraction = csv::parse_double(fields[columns.at("fraction")]);
        if (!x || !detected || !opportunities || !fraction) {
            throw ParseError(line_no, "malformed numeric field");
        }
        if (*x < 1) {
            throw ParseError(line_no, "column position must be positive");
        }
        if (*opportunities == 0) {
            continue;  // densified row for an unobserved column
        }
        if (*detected < 0 || *detected > *opportunities) {
            throw ParseError(line_no, "detected count must lie in [0, opportunities]");
        }
        if (!data.emplace(static_cast<int>(*x), ColumnStats{*detected, *opportunities, *fraction})
                 .second) {
            throw ParseError(line_no, "duplicate column position");
        }
    }
    return data;
}

ReferenceTable load_reference_table(std::istream& in,
                                    const std::vector<std::string>& known_objects,
                                    std::vector<std::string>* warnings) {
    std::string line;
    int line_no = 0;
    if (!csv::next_data_line(in, line, line_no)) {
        if (warnings != nullptr) {
            warnings->push_back("reference table is empty");
        }
        return {};
    }
    const auto header = csv::split(line);
    const auto columns =
        csv::header_index(header, {"object", "altitude_m", "visibility_km", "w_km"}, line_no);
    const std::set<std::string> known(known_objects.begin(), known_objects.end());

    ReferenceTable table;
    while (csv::next_data_line(in, line, line_no)) {
        const auto fields = csv::split(line);
        if (fields.size() != header.size()) {
            throw ParseError(line_no, "expected " + std::to_string(header.size()) +
                                          " fields, got " + std::to_string(fields.size()));
        }
        ReferenceKey key;
        key.object = fields[columns.at("object")];
        if (key.object.empty()) {
            throw ParseError(line_no, "object name must not be empty");
        }
        const auto altitude = csv::parse_int(fields[columns.at("altitude_m")]);
        const auto visibility = csv::parse_double(fields[columns.at("visibility_km")]);
        const auto w = csv::parse_double(fields[columns.at("w_km")]);
        if (!altitude || !visibility || !w) {
            throw ParseError(line_no, "malformed numeric field");
        }
        if (!(*w > 0.0)) {
            throw ParseError(line_no, "w_km must be positive");
        }
        key.altitude_m = static_cast<int>(*altitude);
        key.visibility_km = *visibility;
        if (!known.empty() && !known.contains(key.object) && warnings != nullptr) {
            warnings->push_back("line " + std::to_string(line_no) + ": unknown object name \"" +
                                key.object + "\"");
        }
        if (!table.emplace(std::move(key), *w).second) {
            throw ParseError(line_no, "duplicate (object, altitude, visibility) key");
        }
    }
    if (table.empty() && warnings != nullptr) {
        warnings->push_back("reference table has a header but no rows");
    }
    return table;
}

ComparisonReport compare_tables(const std::vector<SweepWidthResult>& model,
                                const ReferenceTable& reference) {
    ComparisonReport report;
    std::set<ReferenceKey> model_keys;
    double sum_abs_pct = 0.0;
    for (const auto& r : model) {
        ReferenceKey key{r.scenario.object.name, r.scenario.altitude_m, r.scenario.visibility_km};
        model_keys.insert(key);
        const auto it = reference.find(key);
        if (it == reference.end()) {
            ++report.missing_in_reference;
            continue;
        }
        ComparisonCell cell;
        cell.key = std::move(key);
        cell.model_w_km = r.w_km;
        cell.reference_w_km = it->second;
        cell.abs_error_km = std::abs(r.w_km - it->second);
        cell.ratio = r.w_km / it->second;
        sum_abs_pct += cell.abs_error_km / it->second * 100.0;
        if (report.cells_compared == 0) {
            report.min_ratio = report.max_ratio = cell.ratio;
        } else {
            report.min_ratio = std::min(report.min_ratio, cell.ratio);
            report.max_ratio = std::max(report.max_ratio, cell.ratio);
        }
        ++report.cells_compared;
        report.cells.push_back(std::move(cell));
    }
    for (const auto& [key, w] : reference) {
        if (!model_keys.contains(key)) {
            ++report.missing_in_model;
        }
    }
    if (report.cells_compared > 0) {
        report.mape_percent = sum_abs_pct / report.cells_compared;
    }
    return report;
}

void write_comparison_csv(std::ostream& out, const ComparisonReport& report) {
    out << "# sweepw comparison\n";
    out << "object,altitude_m,visibility_km,model_w_km,reference_w_km,abs_error_km,ratio\n";
    for (const auto& cell : report.cells) {
        out << cell.key.object << ',' << cell.key.altitude_m << ','
            << csv::format_double(cell.key.visibility_km) << ','
            << csv::format_double(cell.model_w_km) << ','
            << csv::format_double(cell.reference_w_km) << ','
            << csv::format_double(cell.abs_error_km) << ',' << csv::format_double(cell.ratio)
            << '\n';
    }
    out << "# cells_compared=" << report.cells_compared
        << " missing_in_reference=" << report.missing_in_reference
        << " missing_in_model=" << report.missing_in_model << '\n';
    out << "# mape_percent=" << csv::format_double(report.mape_percent)
        << " min_ratio=" << csv::format_double(report.min_ratio)
        << " max_ratio=" << csv::format_double(report.max_ratio) << '\n';
}

ComparisonReport load_comparison_csv(std::istream& in) {
    ComparisonReport report;
    std::map<std::string, std::string> summary;
    std::map<std::string, std::size_t> columns;
    std::size_t header_width = 0;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto content = csv::trim(line);
        if (content.empty()) {
            continue;
        }
        if (content.front() == '#') {
            std::istringstream tokens{std::string(content.substr(1))};
            std::string token;
            while (tokens >> token) {
                const auto eq = token.find('=');
                if (eq != std::string::npos) {
                    summary[token.substr(0, eq)] = token.substr(eq + 1);
                }
            }
            continue;
        }
        const auto fields = csv::split(content);
        if (columns.empty()) {
            columns = csv::header_index(fields,
                                        {"object", "altitude_m", "visibility_km", "model_w_km",
                                         "reference_w_km", "abs_error_km", "ratio"},
                                        line_no);
            header_width = fields.size();
            continue;
        }
        if (fields.size() != header_width) {
            throw ParseError(line_no, "expected " + std::to_string(header_width) +
                                          " fields, got " + std::to_string(fields.size()));
        }
        ComparisonCell cell;
        cell.key.object = fields[columns.at("object")];
        const auto altitude = csv::parse_int(fields[columns.at("altitude_m")]);
        const auto visibility = csv::parse_double(fields[columns.at("visibility_km")]);
        const auto model_w = csv::parse_double(fields[columns.at("model_w_km")]);
        const auto reference_w = csv::parse_double(fields[columns.at("reference_w_km")]);
        const auto abs_error = csv::parse_double(fields[columns.at("abs_error_km")]);
        const auto ratio = csv::parse_double(fields[columns.at("ratio")]);
        if (!altitude || !visibility || !model_w || !reference_w || !abs_error || !ratio) {
            throw ParseError(line_no, "malformed numeric field");
        }
        cell.key.altitude_m = static_cast<int>(*altitude);
        cell.key.visibility_km = *visibility;
        cell.model_w_km = *model_w;
        cell.reference_w_km = *reference_w;
        cell.abs_error_km = *abs_error;
        cell.ratio = *ratio;
        report.cells.push_back(std::move(cell));
    }
    if (columns.empty()) {
        throw ParseError("comparison report has no header");
    }
    const auto summary_int = [&](const char* key) {
        const auto it = summary.find(key);
        const auto value = it == summary.end() ? std::optional<long long>() : csv::parse_int(it->second);
        if (!value) {
            throw ParseError(std::string("comparison report is missing summary field ") + key);
        }
        return static_cast<int>(*value);
    };
    const auto summary_double = [&](const char* key) {
        const auto it = summary.find(key);
        const auto value = it == summary.end() ? std::optional<double>() : csv::parse_double(it->second);
        if (!value) {
            throw ParseError(std::string("comparison report is missing summary field ") + key);
        }
        return *value;
    };
    report.cells_compared = summary_int("cells_compared");
    report.missing_in_reference = summary_int("missing_in_reference");
    report.missing_in_model = summary_int("missing_in_model");
    report.mape_percent = summary_double("mape_percent");
    report.min_ratio = summary_double("min_ratio");
    report.max_ratio = summary_double("max_ratio");
    return report;
}

}  // namespace sweepw
