// Error hierarchy shared by the whole library. The CLI maps each category to
// a distinct process exit code, so library code should throw the most
// specific of the three.
#pragma once

#include <stdexcept>
#include <string>

namespace retnet {

// Exit codes used by the command-line tool.
enum class ExitCode : int {
    ok = 0,
    config_error = 1,  // bad flags, malformed config, invalid parameters
    data_error = 2,    // missing/malformed input files, degenerate inputs
    compute_error = 3, // iteration did not converge, internal numeric failure
};

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
    virtual ExitCode exit_code() const { return ExitCode::compute_error; }
};

// Invalid parameters or configuration (fractions that do not sum to one,
// unknown keys, out-of-range options, ...).
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
    ExitCode exit_code() const override { return ExitCode::config_error; }
};

// Problems with input data: missing files, rows that do not parse, empty
// datasets, scores outside [0,1], conflicting cascade authors, and similar
// degenerate-input conditions (a graph with no edges where edges are
// required, a group with no members, ...).
class DataError : public Error {
public:
    explicit DataError(const std::string& msg) : Error(msg) {}
    ExitCode exit_code() const override { return ExitCode::data_error; }
};

// Numeric computation failures, e.g. an iterative solver hitting its
// iteration cap before reaching tolerance.
class ComputeError : public Error {
public:
    explicit ComputeError(const std::string& msg) : Error(msg) {}
    ExitCode exit_code() const override { return ExitCode::compute_error; }
};

} // namespace retnet
