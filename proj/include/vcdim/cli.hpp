#pragma once

// Command-line front end: shatter, vcdim, exact and bench subcommands.

#include "vcdim/core.hpp"
#include "vcdim/report.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vcdim::cli {

enum ExitCode : int {
    kOk = 0,
    kConfigError = 1,
    kOracleError = 2,
    kNotShattered = 3,
    kExpectationMismatch = 4,
};

struct RunConfig {
    std::string command;

    // class
    std::string class_name = "halfspace-lp";
    std::size_t dim = 0; // 0: class default (1 for threshold/interval, 2 otherwise)
    std::size_t budget = 10000;
    std::string matrix_path;
    bool complement_symmetry = false;

    // sampler
    std::string sampler; // box | finite | exhaustive; empty picks by class
    double lo = 0.0;
    double hi = 1.0;

    double epsilon = 0.05;
    double delta = 0.05;
    std::size_t d_max = 32;
    std::uint64_t seed = 42;
    std::size_t workers = 1;
    bool early_break = true;
    std::optional<std::size_t> expect;

    // shatter
    std::string points;
    std::string points_file;

    // exact
    std::optional<std::size_t> witness_d;

    // bench
    std::vector<std::size_t> dims = {1, 2, 3};
    std::string oracle = "lp";

    // outputs
    std::string report_path;
    std::string csv_path;
    std::string svg_path;
};

// Thrown for invalid configurations; names the offending flag.
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& field, const std::string& what)
        : std::runtime_error(field + ": " + what), field_(field) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

struct RunResult {
    int exit_code = kOk;
    report::json report;
};

// Point grammar: tuples separated by ';' (or newlines), coordinates by ',',
// parentheses optional. With expected_dim == 1 and no ';' or parentheses,
// commas separate points. Finite-domain points are single integers.
std::vector<Point> parse_points(std::string_view text, std::size_t expected_dim, bool finite);

RunResult run_shatter(const RunConfig& config, std::ostream& out);
RunResult run_vcdim(const RunConfig& config, std::ostream& out);
RunResult run_exact(const RunConfig& config, std::ostream& out);
RunResult run_bench(const RunConfig& config, std::ostream& out);

// Parses argv, dispatches, writes requested output files, maps errors to
// exit codes.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace vcdim::cli
