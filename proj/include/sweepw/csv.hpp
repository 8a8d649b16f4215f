#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sweepw::csv {

std::string_view trim(std::string_view s);

// Splits one line on commas and trims surrounding whitespace from each field
// (this also strips the \r of CRLF input). The formats used here never put
// commas inside fields, so no quoting is involved.
std::vector<std::string> split(std::string_view line);

// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double value);

std::optional<double> parse_double(std::string_view field);
std::optional<long long> parse_int(std::string_view field);
std::optional<unsigned long long> parse_uint(std::string_view field);

// Reads the next content line, skipping blank lines and '#' comments.
// line_no tracks the 1-based position of the returned line in the stream.
bool next_data_line(std::istream& in, std::string& line, int& line_no);

// Maps header field names to column indices. Throws ParseError if a required
// name is missing; extra columns are allowed and ignored.
std::map<std::string, std::size_t> header_index(const std::vector<std::string>& header_fields,
                                                const std::vector<std::string>& required,
                                                int line_no);

}  // namespace sweepw::csv
