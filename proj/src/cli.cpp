#include "vcdim/cli.hpp"

#include "vcdim/classes.hpp"
#include "vcdim/estimator.hpp"
#include "vcdim/exact.hpp"
#include "vcdim/shattering.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace vcdim::cli {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    return parts;
}

double parse_number(const std::string& text) {
    const std::string t = trim(text);
    if (t.empty())
        throw ConfigError("--points", "empty coordinate");
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size())
        throw ConfigError("--points", "not a number: \"" + t + "\"");
    return v;
}

std::size_t parse_index(const std::string& text) {
    const std::string t = trim(text);
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
        throw ConfigError("--points", "finite-domain points are column indices, got \"" + t + "\"");
    return std::stoull(t);
}

std::size_t class_dimension(const RunConfig& c) {
    if (c.class_name == "threshold" || c.class_name == "interval") {
        if (c.dim > 1)
            throw ConfigError("--dim", c.class_name + " is defined on R^1 only");
        return 1;
    }
    return c.dim == 0 ? 2 : c.dim;
}

HypothesisClass make_class(const RunConfig& c) {
    std::optional<HypothesisClass> h;
    if (c.class_name == "threshold")
        h = HypothesisClass::threshold();
    else if (c.class_name == "interval")
        h = HypothesisClass::interval();
    else if (c.class_name == "rectangle")
        h = HypothesisClass::rectangle(class_dimension(c));
    else if (c.class_name == "halfspace-lp")
        h = HypothesisClass::halfspace_lp(class_dimension(c));
    else if (c.class_name == "halfspace-perceptron") {
        if (c.budget < 1)
            throw ConfigError("--budget", "must be >= 1");
        h = HypothesisClass::halfspace_perceptron(class_dimension(c), c.budget);
    } else if (c.class_name == "finite") {
        if (c.matrix_path.empty())
            throw ConfigError("--matrix", "required for --class finite");
        h = HypothesisClass::finite(load_concept_matrix(c.matrix_path));
    } else {
        throw ConfigError("--class", "unknown class \"" + c.class_name + "\"");
    }
    h->assume_complement_closed(c.complement_symmetry);
    return *h;
}

DomainSampler make_sampler(const RunConfig& c, const HypothesisClass& h) {
    std::string kind = c.sampler;
    if (kind.empty())
        kind = h.has_finite_domain() ? "finite" : "box";
    if (kind == "box") {
        if (h.has_finite_domain())
            throw ConfigError("--sampler", "box sampler needs a continuous class");
        if (!(c.lo < c.hi))
            throw ConfigError("--lo/--hi", "need lo < hi");
        return DomainSampler::uniform_box(h.dimension(), c.lo, c.hi, c.seed);
    }
    if (kind == "finite" || kind == "exhaustive") {
        if (!h.has_finite_domain())
            throw ConfigError("--sampler", kind + " sampler needs --class finite");
        return kind == "finite" ? DomainSampler::finite_uniform(h.domain_cardinality(), c.seed)
                                : DomainSampler(Exhaustive{h.domain_cardinality()}, c.seed);
    }
    throw ConfigError("--sampler", "unknown sampler \"" + kind + "\"");
}

EstimatorOptions make_options(const RunConfig& c) {
    if (!(c.epsilon > 0 && c.epsilon < 1))
        throw ConfigError("--epsilon", "must lie in (0, 1)");
    if (!(c.delta > 0 && c.delta < 1))
        throw ConfigError("--delta", "must lie in (0, 1)");
    if (c.d_max < 1)
        throw ConfigError("--d-max", "must be >= 1");
    if (c.workers < 1)
        throw ConfigError("--workers", "must be >= 1");
    EstimatorOptions o;
    o.epsilon = c.epsilon;
    o.delta = c.delta;
    o.d_max = c.d_max;
    o.workers = c.workers;
    o.early_break = c.early_break;
    o.use_complement_symmetry = c.complement_symmetry;
    return o;
}

report::json config_json(const RunConfig& c) {
    report::json j;
    j["command"] = c.command;
    j["class"] = c.class_name;
    j["dim"] = c.dim;
    j["budget"] = c.budget;
    j["matrix"] = c.matrix_path;
    j["complement_symmetry"] = c.complement_symmetry;
    j["sampler"] = c.sampler;
    j["lo"] = c.lo;
    j["hi"] = c.hi;
    j["epsilon"] = c.epsilon;
    j["delta"] = c.delta;
    j["d_max"] = c.d_max;
    j["seed"] = c.seed;
    j["workers"] = c.workers;
    j["early_break"] = c.early_break;
    j["expect"] = c.expect ? report::json(*c.expect) : report::json(nullptr);
    if (c.command == "shatter") {
        j["points"] = c.points;
        j["points_file"] = c.points_file;
    }
    if (c.command == "bench") {
        j["dims"] = c.dims;
        j["oracle"] = c.oracle;
    }
    if (c.command == "exact")
        j["witness_d"] = c.witness_d ? report::json(*c.witness_d) : report::json(nullptr);
    return j;
}

report::json base_report(const RunConfig& c) {
    report::json j;
    j["tool"] = "vcdim";
    j["command"] = c.command;
    j["config"] = config_json(c);
    return j;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw ConfigError("output", "cannot write " + path);
    f << content;
}

void write_report(const RunConfig& c, const report::json& j) {
    if (!c.report_path.empty())
        write_text_file(c.report_path, j.dump(2) + "\n");
}

void print_estimate(std::ostream& out, const VcEstimate& e) {
    out << "class:       " << e.class_name << '\n'
        << "sampler:     " << e.sampler << '\n'
        << "seed:        " << e.seed << '\n'
        << "certificate: epsilon=" << e.certificate.epsilon << " delta=" << e.certificate.delta
        << " m=" << e.certificate.sample_size_m << '\n';
    out << std::setw(4) << "d" << std::setw(10) << "m" << std::setw(10) << "z_m" << std::setw(12) << "unresolved"
        << std::setw(14) << "elapsed_s" << '\n';
    for (const auto& r : e.per_d) {
        out << std::setw(4) << r.d << std::setw(10) << r.m << std::setw(10) << r.z_m << std::setw(12)
            << r.unresolved << std::setw(14) << report::format_seconds(r.elapsed_s);
        if (r.short_circuit)
            out << "  (d exceeds the domain)";
        else if (r.z_is_lower_bound)
            out << "  (stopped at first shattered draw)";
        out << '\n';
    }
    out << "vc:          " << report::format_vc(e.vc) << '\n';
    if (const auto u = e.unresolved_at_stop(); u > 0) {
        const auto m = e.per_d.back().m;
        out << "warning: " << u << " of " << m << " draws at the stopping size were not shattered only "
            << "because the oracle ran out of budget (rate " << std::setprecision(4) << double(u) / double(m)
            << ")\n";
    }
    out << "note: the estimate is relative to the sampling distribution above; sets of size "
        << (e.vc ? *e.vc + 1 : e.per_d.size()) << " that the sampler draws with negligible probability "
        << "are invisible to it.\n";
}

} // namespace

std::vector<Point> parse_points(std::string_view text, std::size_t expected_dim, bool finite) {
    std::string body(text);
    for (auto& ch : body)
        if (ch == '\n')
            ch = ';';
    const bool has_parens = body.find('(') != std::string::npos;
    const bool has_semicolons = body.find(';') != std::string::npos;

    std::vector<std::string> tuples;
    if ((expected_dim == 1 || finite) && !has_parens && !has_semicolons) {
        tuples = split(body, ',');
    } else {
        for (auto& t : split(body, ';'))
            if (!trim(t).empty())
                tuples.push_back(t);
    }

    std::vector<Point> points;
    for (auto& raw : tuples) {
        std::string t = trim(raw);
        if (!t.empty() && t.front() == '(') {
            if (t.back() != ')')
                throw ConfigError("--points", "unbalanced parentheses in \"" + t + "\"");
            t = t.substr(1, t.size() - 2);
        }
        if (t.empty())
            throw ConfigError("--points", "empty point");
        // Without commas, whitespace separates coordinates.
        std::vector<std::string> coords;
        if (t.find(',') != std::string::npos) {
            coords = split(t, ',');
        } else {
            std::istringstream words(t);
            for (std::string w; words >> w;)
                coords.push_back(w);
        }
        if (finite) {
            if (coords.size() != 1)
                throw ConfigError("--points", "finite-domain points take one index, got \"" + t + "\"");
            points.push_back(Point::finite(parse_index(coords[0])));
            continue;
        }
        std::vector<double> x;
        for (auto& c : coords)
            x.push_back(parse_number(c));
        if (expected_dim != 0 && x.size() != expected_dim)
            throw ConfigError("--points", "point \"" + t + "\" has " + std::to_string(x.size()) +
                                              " coordinates, expected " + std::to_string(expected_dim));
        try {
            points.push_back(Point::continuous(std::move(x)));
        } catch (const ContractViolation& e) {
            throw ConfigError("--points", e.what());
        }
    }
    if (points.empty())
        throw ConfigError("--points", "no points given");
    return points;
}

RunResult run_shatter(const RunConfig& config, std::ostream& out) {
    const auto h = make_class(config);
    std::string text = config.points;
    if (!config.points_file.empty()) {
        std::ifstream f(config.points_file);
        if (!f)
            throw ConfigError("--points-file", "cannot open " + config.points_file);
        std::string line;
        text.clear();
        while (std::getline(f, line)) {
            if (auto hash = line.find('#'); hash != std::string::npos)
                line.erase(hash);
            if (!trim(line).empty())
                text += trim(line) + ";";
        }
    }
    if (trim(text).empty())
        throw ConfigError("--points", "shatter needs --points or --points-file");
    const bool finite = h.has_finite_domain();
    std::optional<PointSet> points;
    try {
        points.emplace(parse_points(text, finite ? 0 : h.dimension(), finite));
    } catch (const ContractViolation& e) {
        throw ConfigError("--points", e.what());
    }

    ShatterOptions opts;
    opts.workers = std::max<std::size_t>(1, config.workers);
    opts.use_complement_symmetry = config.complement_symmetry;
    const auto verdict = shatters(h, *points, opts);

    out << "class:      " << h.name() << '\n' << "points:     ";
    for (std::size_t i = 0; i < points->size(); ++i)
        out << (i ? ";" : "") << (*points)[i].to_string();
    out << '\n'
        << "shattered:  " << (verdict.shattered ? "yes" : "no") << '\n'
        << "witness:    " << (verdict.witness ? verdict.witness->to_string() : "-") << '\n'
        << "erm_calls:  " << verdict.erm_calls << '\n'
        << "unresolved: " << (verdict.unresolved ? "true" : "false") << '\n';

    RunResult result;
    result.report = base_report(config);
    report::json pts = report::json::array();
    for (const auto& p : points->points())
        pts.push_back(p.to_string());
    result.report["points"] = std::move(pts);
    result.report["verdict"] = report::to_json(verdict);
    result.exit_code = verdict.shattered ? kOk : kNotShattered;
    write_report(config, result.report);
    return result;
}

RunResult run_vcdim(const RunConfig& config, std::ostream& out) {
    const auto h = make_class(config);
    const auto sampler = make_sampler(config, h);
    const auto options = make_options(config);

    RunResult result;
    result.report = base_report(config);
    VcEstimate est;
    try {
        est = estimate_vcdim(h, sampler, options);
    } catch (const EstimationError& e) {
        result.report["estimate"] = report::to_json(e.partial());
        result.report["error"] = e.what();
        write_report(config, result.report);
        throw;
    }
    print_estimate(out, est);
    result.report["estimate"] = report::to_json(est);

    if (config.expect) {
        const bool met = est.vc && *est.vc == *config.expect;
        result.report["expect_met"] = met;
        out << "expect:      " << *config.expect << (met ? " (confirmed)" : " (MISMATCH)") << '\n';
        result.exit_code = met ? kOk : kExpectationMismatch;
    }
    write_report(config, result.report);
    if (!config.csv_path.empty()) {
        std::ostringstream csv;
        report::write_per_d_csv(csv, est);
        write_text_file(config.csv_path, csv.str());
    }
    return result;
}

RunResult run_exact(const RunConfig& config, std::ostream& out) {
    if (config.matrix_path.empty())
        throw ConfigError("--matrix", "exact needs a matrix file");
    const auto matrix = load_concept_matrix(config.matrix_path);
    ExactOptions opts;
    opts.workers = std::max<std::size_t>(1, config.workers);
    const auto vc = exact_vcdim_matrix(matrix, opts);

    RunResult result;
    result.report = base_report(config);
    result.report["rows"] = matrix.rows();
    result.report["cols"] = matrix.cols();
    result.report["distinct_rows"] = matrix.distinct_rows();
    result.report["vc"] = vc;
    out << "matrix: " << matrix.rows() << " x " << matrix.cols() << " (" << matrix.distinct_rows()
        << " distinct rows)\n"
        << "vc:     " << vc << '\n';

    if (config.witness_d) {
        if (*config.witness_d < 1 || *config.witness_d > matrix.cols())
            throw ConfigError("--witness", "must be in [1, " + std::to_string(matrix.cols()) + "]");
        const auto w = exact_shattered_witness(matrix, *config.witness_d, opts);
        out << "witness(" << *config.witness_d << "): ";
        if (w) {
            out << '{';
            for (std::size_t i = 0; i < w->size(); ++i)
                out << (i ? "," : "") << (*w)[i];
            out << "}\n";
            result.report["witness"] = *w;
        } else {
            out << "none\n";
            result.report["witness"] = nullptr;
        }
    }
    if (config.expect) {
        const bool met = vc == *config.expect;
        result.report["expect_met"] = met;
        result.exit_code = met ? kOk : kExpectationMismatch;
    }
    write_report(config, result.report);
    return result;
}

RunResult run_bench(const RunConfig& config, std::ostream& out) {
    if (config.dims.empty())
        throw ConfigError("--dims", "need at least one ambient dimension");
    if (config.oracle != "lp" && config.oracle != "perceptron")
        throw ConfigError("--oracle", "expected lp or perceptron");
    const auto options = make_options(config);

    std::vector<report::BenchRow> rows;
    report::json runs = report::json::array();
    for (auto n : config.dims) {
        if (n < 1)
            throw ConfigError("--dims", "ambient dimensions must be >= 1");
        RunConfig one = config;
        one.class_name = config.oracle == "lp" ? "halfspace-lp" : "halfspace-perceptron";
        one.dim = n;
        one.sampler = "box";
        const auto h = make_class(one);
        const auto sampler = make_sampler(one, h);

        const auto started = std::chrono::steady_clock::now();
        const auto est = estimate_vcdim(h, sampler, options);
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

        rows.push_back({n, est.vc, elapsed, est.unresolved_at_stop()});
        report::json run;
        run["n"] = n;
        run["vc"] = est.vc ? report::json(*est.vc) : report::json("infinite");
        run["elapsed_s"] = elapsed;
        run["estimate"] = report::to_json(est);
        runs.push_back(std::move(run));
    }

    out << std::setw(4) << "n" << std::setw(8) << "vc" << std::setw(14) << "elapsed_s" << std::setw(12)
        << "unresolved" << '\n';
    for (const auto& r : rows)
        out << std::setw(4) << r.n << std::setw(8) << report::format_vc(r.vc) << std::setw(14)
            << report::format_seconds(r.elapsed_s) << std::setw(12) << r.unresolved_at_stop << '\n';

    RunResult result;
    result.report = base_report(config);
    result.report["runs"] = std::move(runs);
    write_report(config, result.report);
    if (!config.csv_path.empty()) {
        std::ostringstream csv;
        report::write_bench_csv(csv, rows);
        write_text_file(config.csv_path, csv.str());
    }
    if (!config.svg_path.empty()) {
        std::ostringstream svg;
        report::write_bench_svg(svg, rows, "VC estimation time, half-spaces (" + config.oracle + ")");
        write_text_file(config.svg_path, svg.str());
    }
    return result;
}

namespace {

void add_class_options(CLI::App* app, RunConfig& c) {
    app->add_option("--class", c.class_name,
                    "threshold | interval | rectangle | halfspace-lp | halfspace-perceptron | finite");
    app->add_option("--dim", c.dim, "ambient dimension of continuous classes");
    app->add_option("--budget", c.budget, "perceptron update budget");
    app->add_option("--matrix", c.matrix_path, "concept matrix file (finite class)");
    app->add_flag("--complement-symmetry", c.complement_symmetry,
                  "treat the class as closed under complement and skip complemented labelings");
    app->add_option("--workers", c.workers, "worker threads");
    app->add_option("--report", c.report_path, "write a JSON report here");
}

void add_estimation_options(CLI::App* app, RunConfig& c) {
    app->add_option("--sampler", c.sampler, "box | finite | exhaustive");
    app->add_option("--lo", c.lo, "lower bound of the sampling box");
    app->add_option("--hi", c.hi, "upper bound of the sampling box");
    app->add_option("--epsilon", c.epsilon, "Hoeffding precision");
    app->add_option("--delta", c.delta, "Hoeffding confidence parameter");
    app->add_option("--d-max", c.d_max, "largest size tried before reporting infinity");
    app->add_option("--seed", c.seed, "sampling seed");
    app->add_flag("!--no-early-break", c.early_break, "draw all m sets at every size");
}

} // namespace

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Shattering checks and VC-dimension estimation via ERM oracles"};
    app.require_subcommand(1);
    RunConfig c;

    auto* shatter = app.add_subcommand("shatter", "decide whether a class shatters a point set");
    add_class_options(shatter, c);
    shatter->add_option("--points", c.points, "points: \"(x,y);(x,y)\" or \"x1,x2\" in one dimension");
    shatter->add_option("--points-file", c.points_file, "file with one point per line");

    auto* vcdim = app.add_subcommand("vcdim", "estimate the VC dimension of a class");
    add_class_options(vcdim, c);
    add_estimation_options(vcdim, c);
    vcdim->add_option("--expect", c.expect, "exit 4 unless the estimate equals this value");
    vcdim->add_option("--csv", c.csv_path, "per-size table (d,m,z_m,unresolved,elapsed_s)");

    auto* exact = app.add_subcommand("exact", "exact VC dimension of a concept matrix");
    exact->add_option("--matrix", c.matrix_path, "concept matrix file")->required();
    exact->add_option("--witness", c.witness_d, "print the first shattered column subset of this size");
    exact->add_option("--workers", c.workers, "worker threads");
    exact->add_option("--expect", c.expect, "exit 4 unless the VC dimension equals this value");
    exact->add_option("--report", c.report_path, "write a JSON report here");

    auto* bench = app.add_subcommand("bench", "half-space VC estimation across ambient dimensions");
    add_class_options(bench, c);
    add_estimation_options(bench, c);
    bench->add_option("--dims", c.dims, "ambient dimensions, comma separated")->delimiter(',');
    bench->add_option("--oracle", c.oracle, "lp | perceptron");
    bench->add_option("--csv", c.csv_path, "table (n,vc,elapsed_s)");
    bench->add_option("--svg", c.svg_path, "chart of elapsed seconds against n");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    }

    try {
        if (shatter->parsed()) {
            c.command = "shatter";
            return run_shatter(c, out).exit_code;
        }
        if (vcdim->parsed()) {
            c.command = "vcdim";
            return run_vcdim(c, out).exit_code;
        }
        if (exact->parsed()) {
            c.command = "exact";
            return run_exact(c, out).exit_code;
        }
        c.command = "bench";
        return run_bench(c, out).exit_code;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const MatrixParseError& e) {
        err << "matrix parse error: " << e.what() << '\n';
        return kConfigError;
    } catch (const ContractViolation& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kConfigError;
    } catch (const OracleError& e) {
        err << "oracle error: " << e.what() << '\n';
        return kOracleError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    }
}

} // namespace vcdim::cli
