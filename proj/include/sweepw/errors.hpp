#pragma once

#include <stdexcept>
#include <string>

namespace sweepw {

// Base class for all library errors; the CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid configuration value or violated call precondition.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// Malformed input file. Carries the 1-based line number when known.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
    ParseError(int line, const std::string& msg)
        : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}

    int line() const { return line_; }

private:
    int line_ = 0;  // 0 when unknown
};

// A (object, altitude, visibility) combination that cannot be simulated.
class ScenarioError : public Error {
public:
    explicit ScenarioError(const std::string& msg) : Error(msg) {}
};

}  // namespace sweepw
