// Acceptance suite. Usage: acceptance [criterion ...]; no arguments runs all.
// Prints one PASS/FAIL line per criterion and exits nonzero if any failed.

#include "test_support.hpp"
#include "vcdim/cli.hpp"
#include "vcdim/estimator.hpp"
#include "vcdim/exact.hpp"
#include "vcdim/report.hpp"
#include "vcdim/shattering.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

using namespace vcdim;
using namespace vcdim::testing;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::uint64_t kCorpusSeed = 2024;

struct Verdict {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
    void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

double seconds_since(Clock::time_point t) {
    return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

std::vector<report::BenchRow> bench(const std::vector<std::size_t>& dims, const std::string& oracle, double eps,
                                    double delta, std::uint64_t seed) {
    cli::RunConfig c;
    c.command = "bench";
    c.dims = dims;
    c.oracle = oracle;
    c.epsilon = eps;
    c.delta = delta;
    c.seed = seed;
    c.budget = kDefaultPerceptronBudget;
    std::ostringstream sink;
    auto result = cli::run_bench(c, sink);
    std::vector<report::BenchRow> rows;
    for (const auto& run : result.report["runs"]) {
        report::BenchRow r;
        r.n = run["n"].get<std::size_t>();
        if (run["vc"].is_number())
            r.vc = run["vc"].get<std::size_t>();
        r.elapsed_s = run["elapsed_s"].get<double>();
        auto est = report::vc_estimate_from_json(run["estimate"]);
        r.unresolved_at_stop = est.unresolved_at_stop();
        rows.push_back(r);
    }
    return rows;
}

std::string vc_list(const std::vector<report::BenchRow>& rows) {
    std::string s;
    for (const auto& r : rows)
        s += (s.empty() ? "" : ",") + report::format_vc(r.vc);
    return "(" + s + ")";
}

// 1. Half-space table, scaled and at the slow-tier parameters.
Verdict criterion_1() {
    Verdict v;
    auto t = Clock::now();
    auto rows = bench({1, 2, 3}, "lp", 0.05, 0.05, 42);
    const double fast = seconds_since(t);
    v.require(rows.size() == 3 && rows[0].vc == 2u && rows[1].vc == 3u && rows[2].vc == 4u,
              "vc " + vc_list(rows) + " != (2,3,4)");
    v.require(fast < 300, "runtime " + fmt(fast) + "s >= 300s");
    v.note("eps=delta=0.05 vc " + vc_list(rows) + " in " + fmt(fast) + "s");

    t = Clock::now();
    auto slow = bench({1, 2}, "lp", 0.01, 0.01, 42);
    const double slow_s = seconds_since(t);
    v.require(hoeffding_sample_size(0.01, 0.01) == 26492, "slow-tier m != 26492");
    v.require(slow.size() == 2 && slow[0].vc == 2u && slow[1].vc == 3u, "slow tier vc " + vc_list(slow) + " != (2,3)");
    v.require(slow_s < 1800, "slow tier " + fmt(slow_s) + "s >= 1800s");
    v.note("eps=delta=0.01 (m=26492) vc " + vc_list(slow) + " in " + fmt(slow_s) + "s");
    return v;
}

// 2. Perceptron oracle against the LP oracle.
Verdict criterion_2() {
    Verdict v;
    auto lp = bench({1, 2}, "lp", 0.05, 0.05, 42);
    auto pc = bench({1, 2}, "perceptron", 0.05, 0.05, 42);
    const auto m = hoeffding_sample_size(0.05, 0.05);
    v.require(lp.size() == 2 && pc.size() == 2, "missing rows");
    for (std::size_t i = 0; i < std::min(lp.size(), pc.size()); ++i) {
        const auto n = std::to_string(lp[i].n);
        v.require(lp[i].vc == pc[i].vc, "n=" + n + " vc lp " + report::format_vc(lp[i].vc) + " vs perceptron " +
                                            report::format_vc(pc[i].vc));
        v.require(pc[i].unresolved_at_stop * 10 <= m, "n=" + n + " unresolved_count " +
                                                           std::to_string(pc[i].unresolved_at_stop) + " > 0.1*m (m=" +
                                                           std::to_string(m) + ")");
    }
    v.note("lp " + vc_list(lp) + ", perceptron " + vc_list(pc));
    return v;
}

// 3. Exhaustive sampler equals the exact value.
Verdict criterion_3() {
    Verdict v;
    auto t = Clock::now();
    std::size_t mismatches = 0;
    const auto corpus = matrix_corpus(100, kCorpusSeed);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& m = corpus[i];
        const auto exact = exact_vcdim_matrix(m);
        auto est = estimate_vcdim(HypothesisClass::finite(m), DomainSampler::exhaustive(m.cols()));
        if (est.vc != std::optional<std::size_t>(exact)) {
            ++mismatches;
            v.require(false, "matrix " + std::to_string(i) + ": estimate " + report::format_vc(est.vc) +
                                 " != exact " + std::to_string(exact));
        }
    }
    const double s = seconds_since(t);
    v.require(s < 120, "runtime " + fmt(s) + "s >= 120s");
    v.note(std::to_string(corpus.size() - mismatches) + "/" + std::to_string(corpus.size()) + " equal in " + fmt(s) +
           "s");
    return v;
}

// 4. The estimate never exceeds the exact value.
Verdict criterion_4() {
    Verdict v;
    EstimatorOptions o;
    o.epsilon = o.delta = 0.1;
    std::size_t runs = 0, violations = 0;
    const auto corpus = matrix_corpus(100, kCorpusSeed);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& m = corpus[i];
        const auto exact = exact_vcdim_matrix(m);
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            auto est = estimate_vcdim(HypothesisClass::finite(m), DomainSampler::finite_uniform(m.cols(), seed), o);
            ++runs;
            if (!est.vc || *est.vc > exact) {
                ++violations;
                v.require(false, "matrix " + std::to_string(i) + " seed " + std::to_string(seed) + ": " +
                                     report::format_vc(est.vc) + " > " + std::to_string(exact));
            }
        }
    }
    v.note(std::to_string(violations) + " violations in " + std::to_string(runs) + " runs");
    return v;
}

// 5. Classes with classical dimensions.
Verdict criterion_5() {
    Verdict v;
    struct Case {
        const char* name;
        HypothesisClass h;
        std::size_t expected;
    };
    const Case cases[] = {{"threshold", HypothesisClass::threshold(), 1},
                          {"interval", HypothesisClass::interval(), 2},
                          {"rectangle", HypothesisClass::rectangle(2), 4}};
    std::string got;
    for (const auto& c : cases)
        for (std::uint64_t seed : {1, 2, 3}) {
            auto est = estimate_vcdim(c.h, DomainSampler::uniform_box(c.h.dimension(), 0, 1, seed));
            got += std::string(got.empty() ? "" : " ") + c.name + "/" + std::to_string(seed) + "=" +
                   report::format_vc(est.vc);
            v.require(est.vc == std::optional<std::size_t>(c.expected),
                      std::string(c.name) + " seed " + std::to_string(seed) + " gave " + report::format_vc(est.vc));
        }
    v.note(got);
    return v;
}

// 6. Hoeffding sample sizes.
Verdict criterion_6() {
    Verdict v;
    v.require(hoeffding_sample_size(1 / std::sqrt(2.0), 2 / std::exp(2.0)) == 2, "m(1/sqrt2, 2/e^2) != 2");
    v.require(hoeffding_sample_size(0.05, 0.05) == 738, "m(0.05, 0.05) != 738");
    v.require(hoeffding_sample_size(0.01, 0.01) == 26492, "m(0.01, 0.01) != 26492");
    std::size_t bad = 0;
    for (int i = 0; i < 20; ++i)
        for (int j = 0; j < 20; ++j) {
            const double eps = 0.01 + 0.6 * i / 19.0;
            const double delta = 0.001 + 0.9 * j / 19.0;
            const auto m = hoeffding_sample_size(eps, delta);
            const bool holds = 2 * std::exp(-2 * double(m) * eps * eps) <= delta * (1 + 1e-12);
            const bool minimal = m == 1 || 2 * std::exp(-2 * double(m - 1) * eps * eps) > delta * (1 + 1e-12);
            if (!holds || !minimal || m != linear_search_sample_size(eps, delta)) {
                ++bad;
                v.require(false, "eps=" + std::to_string(eps) + " delta=" + std::to_string(delta));
            }
        }
    v.note("examples 2,738,26492; grid 400 points, " + std::to_string(bad) + " failures");
    return v;
}

// 7. Worker count never changes a shattering verdict.
Verdict criterion_7() {
    Verdict v;
    struct Fixture {
        HypothesisClass h;
        PointSet pts;
    };
    std::vector<Fixture> fixtures;
    std::mt19937_64 rng(7);
    for (int i = 0; i < 8; ++i)
        fixtures.push_back({HypothesisClass::threshold(), random_points(rng, 1 + i % 3, 1)});
    for (int i = 0; i < 8; ++i)
        fixtures.push_back({HypothesisClass::interval(), random_points(rng, 1 + i % 4, 1)});
    for (int i = 0; i < 9; ++i)
        fixtures.push_back({HypothesisClass::rectangle(2), random_points(rng, 2 + i % 5, 2)});
    for (int i = 0; i < 9; ++i)
        fixtures.push_back({HypothesisClass::halfspace_lp(1 + i % 3), random_points(rng, 2 + i % 5, 1 + i % 3)});
    for (int i = 0; i < 8; ++i)
        fixtures.push_back({HypothesisClass::halfspace_perceptron(2, 2000), random_points(rng, 2 + i % 4, 2)});
    const auto corpus = matrix_corpus(8, 99);
    for (const auto& m : corpus) {
        std::vector<Point> cols;
        for (std::size_t j = 0; j < m.cols(); ++j)
            cols.push_back(Point::finite(j));
        fixtures.push_back({HypothesisClass::finite(m), PointSet(cols)});
    }

    std::size_t shattered = 0;
    std::set<ClassKind> kinds;
    for (std::size_t i = 0; i < fixtures.size(); ++i) {
        const auto& f = fixtures[i];
        kinds.insert(f.h.kind());
        std::string reference;
        for (std::size_t w : {1, 2, 8}) {
            auto verdict = shatters(f.h, f.pts, {w, false});
            const auto doc = report::strip_timing(report::to_json(verdict)).dump();
            if (w == 1) {
                reference = doc;
                shattered += verdict.shattered;
            } else if (doc != reference) {
                v.require(false, "fixture " + std::to_string(i) + " differs at " + std::to_string(w) + " workers");
            }
        }
    }
    v.require(fixtures.size() == 50, "fixture count " + std::to_string(fixtures.size()));
    v.require(kinds.size() == 6, "fixtures cover " + std::to_string(kinds.size()) + " of 6 classes");
    v.note(std::to_string(fixtures.size()) + " fixtures, " + std::to_string(shattered) + " shattered, workers 1/2/8");
    return v;
}

// 8. Bench time grows with the ambient dimension.
Verdict criterion_8() {
    Verdict v;
    auto rows = bench({1, 2, 3, 4}, "lp", 0.05, 0.05, 42);
    std::string times;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        times += (times.empty() ? "" : ", ") + std::string("n=") + std::to_string(rows[i].n) + ":" +
                 report::format_seconds(rows[i].elapsed_s);
        if (i > 0)
            v.require(rows[i].elapsed_s > rows[i - 1].elapsed_s,
                      "time at n=" + std::to_string(rows[i].n) + " not above n=" + std::to_string(rows[i - 1].n));
    }
    v.require(rows.size() == 4, "missing rows");
    v.note(times);
    return v;
}

const std::map<int, std::pair<const char*, std::function<Verdict()>>> kCriteria = {
    {1, {"half-space table reproduction", criterion_1}},
    {2, {"perceptron vs LP agreement", criterion_2}},
    {3, {"exhaustive estimate equals exact", criterion_3}},
    {4, {"soundness across seeds", criterion_4}},
    {5, {"closed-form classes", criterion_5}},
    {6, {"Hoeffding certificate", criterion_6}},
    {7, {"shattering determinism", criterion_7}},
    {8, {"complexity shape", criterion_8}},
};

} // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        const int k = std::atoi(argv[i]);
        if (!kCriteria.count(k)) {
            std::cerr << "unknown criterion " << argv[i] << '\n';
            return 2;
        }
        selected.push_back(k);
    }
    if (selected.empty())
        for (const auto& [k, _] : kCriteria)
            selected.push_back(k);

    int failed = 0;
    for (int k : selected) {
        const auto& [name, fn] = kCriteria.at(k);
        Verdict v;
        auto t = Clock::now();
        try {
            v = fn();
        } catch (const std::exception& e) {
            v.pass = false;
            v.detail = std::string("exception: ") + e.what();
        }
        std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << k << " (" << name << ") [" << fmt(seconds_since(t))
                  << "s]: " << v.detail << std::endl;
        failed += !v.pass;
    }
    return failed ? 1 : 0;
}
