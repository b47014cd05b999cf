#pragma once

// Machine-readable run reports (JSON), per-d and bench CSV tables, and the
// bench timing chart (SVG).

#include "vcdim/estimator.hpp"
#include "vcdim/shattering.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace vcdim::report {

using json = nlohmann::ordered_json;

json to_json(const Certificate& c);
json to_json(const DimensionRecord& r);
json to_json(const VcEstimate& e);
json to_json(const ShatterVerdict& v);

Certificate certificate_from_json(const json& j);
DimensionRecord dimension_record_from_json(const json& j);
VcEstimate vc_estimate_from_json(const json& j);
ShatterVerdict shatter_verdict_from_json(const json& j);

// Copy with every "elapsed_s" member removed, at any depth.
json strip_timing(const json& j);

// One row of the bench table.
struct BenchRow {
    std::size_t n = 0;
    std::optional<std::size_t> vc; // empty = infinite
    double elapsed_s = 0.0;
    std::uint64_t unresolved_at_stop = 0;
};

// "%.6f"
std::string format_seconds(double seconds);
std::string format_vc(const std::optional<std::size_t>& vc);

// Header "d,m,z_m,unresolved,elapsed_s".
void write_per_d_csv(std::ostream& out, const VcEstimate& e);
// Header "n,vc,elapsed_s".
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);
// Line chart of elapsed seconds against ambient dimension.
void write_bench_svg(std::ostream& out, const std::vector<BenchRow>& rows, const std::string& title);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};
CsvTable read_csv(std::istream& in);

} // namespace vcdim::report
