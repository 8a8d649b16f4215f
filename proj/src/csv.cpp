#include "sweepw/csv.hpp"

#include <charconv>
#include <istream>

#include "sweepw/errors.hpp"

namespace sweepw::csv {

std::string_view trim(std::string_view s) {
    const char* ws = " \t\r\n";
    const auto first = s.find_first_not_of(ws);
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(ws);
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split(std::string_view line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.emplace_back(trim(line.substr(start)));
            break;
        }
        fields.emplace_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

std::string format_double(double value) {
    char buf[32];
    const auto result = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, result.ptr);
}

std::optional<double> parse_double(std::string_view field) {
    const auto trimmed = trim(field);
    if (trimmed.empty()) {
        return std::nullopt;
    }
    double value = 0.0;
    const auto result = std::from_chars(trimmed.data(), trimmed.data() + trimmed.size(), value);
    if (result.ec != std::errc() || result.ptr != trimmed.data() + trimmed.size()) {
        return std::nullopt;
    }
    return value;
}

std::optional<long long> parse_int(std::string_view field) {
    const auto trimmed = trim(field);
    if (trimmed.empty()) {
        return std::nullopt;
    }
    long long value = 0;
    const auto result = std::from_chars(trimmed.data(), trimmed.data() + trimmed.size(), value);
    if (result.ec != std::errc() || result.ptr != trimmed.data() + trimmed.size()) {
        return std::nullopt;
    }
    return value;
}

std::optional<unsigned long long> parse_uint(std::string_view field) {
    const auto trimmed = trim(field);
    if (trimmed.empty()) {
        return std::nullopt;
    }
    unsigned long long value = 0;
    const auto result = std::from_chars(trimmed.data(), trimmed.data() + trimmed.size(), value);
    if (result.ec != std::errc() || result.ptr != trimmed.data() + trimmed.size()) {
        return std::nullopt;
    }
    return value;
}

bool next_data_line(std::istream& in, std::string& line, int& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        const auto content = trim(line);
        if (content.empty() || content.front() == '#') {
            continue;
        }
        return true;
    }
    return false;
}

std::map<std::string, std::size_t> header_index(const std::vector<std::string>& header_fields,
                                                const std::vector<std::string>& required,
                                                int line_no) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < header_fields.size(); ++i) {
        index.emplace(header_fields[i], i);
    }
    for (const auto& name : required) {
        if (!index.contains(name)) {
            throw ParseError(line_no, "missing required column '" + name + "'");
        }
    }
    return index;
}

}  // namespace sweepw::csv
