#pragma once

// Monte Carlo estimation of the VC dimension.
//
// For d = 1, 2, ... draw m point sets of size d, count the ones the class
// does not shatter (Z_m) and stop at the first d with Z_m = m, reporting
// d - 1. The sample size m comes from Hoeffding's inequality so that the
// empirical non-shattering frequency is within epsilon of its expectation
// with probability at least 1 - delta. All statements are relative to the
// sampling distribution, which the report records.

#include "vcdim/classes.hpp"
#include "vcdim/core.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace vcdim {

// Relative slack when testing 2 exp(-2 m eps^2) <= delta in floating point,
// so that parameters chosen to make the bound an exact equality (eps = 1/sqrt 2,
// delta = 2/e^2) give the intended m.
inline constexpr double kHoeffdingRelativeSlack = 1e-12;

// ceil(ln(2/delta) / (2 eps^2)): the smallest m with 2 exp(-2 m eps^2) <= delta.
std::uint64_t hoeffding_sample_size(double epsilon, double delta);

// 2 exp(-2 m eps^2) <= delta, up to kHoeffdingRelativeSlack.
bool hoeffding_guarantee_holds(std::uint64_t m, double epsilon, double delta);

struct Certificate {
    double epsilon = 0.05;
    double delta = 0.05;
    std::uint64_t sample_size_m = 0;

    static Certificate make(double epsilon, double delta);
};

// ─── Samplers ─────────────────────────────────────────────────
struct UniformBox {
    std::vector<double> lo;
    std::vector<double> hi;
};
struct FiniteUniform {
    std::size_t cardinality = 0;
};
// Enumerates every d-subset in lexicographic order while C(N, d) <= cap;
// above the cap it draws m uniform subsets instead.
struct Exhaustive {
    std::size_t cardinality = 0;
    std::uint64_t cap = 1'000'000;
};

class DomainSampler {
public:
    using Kind = std::variant<UniformBox, FiniteUniform, Exhaustive>;

    DomainSampler(Kind kind, std::uint64_t seed);

    static DomainSampler uniform_box(std::size_t n, double lo, double hi, std::uint64_t seed);
    static DomainSampler finite_uniform(std::size_t cardinality, std::uint64_t seed);
    static DomainSampler exhaustive(std::size_t cardinality, std::uint64_t seed = 0);

    const Kind& kind() const { return kind_; }
    std::uint64_t seed() const { return seed_; }
    bool is_finite() const { return !std::holds_alternative<UniformBox>(kind_); }
    std::size_t cardinality() const;
    std::size_t dimension() const;

    // True when draws at size d walk through all C(N, d) subsets.
    bool enumerates(std::size_t d) const;
    // Draw count at size d for a certificate of size m.
    std::uint64_t draws(std::size_t d, std::uint64_t m) const;

    std::string describe() const;

private:
    Kind kind_;
    std::uint64_t seed_;
};

// Draw number `draw_index` of size d: a deterministic function of
// (seed, d, draw_index), independent of the order draws are made in.
PointSet sample_domain_set(const DomainSampler& sampler, std::size_t d, std::uint64_t draw_index);

// ─── Estimation ───────────────────────────────────────────────
struct EstimatorOptions {
    double epsilon = 0.05;
    double delta = 0.05;
    std::size_t d_max = 32;
    std::size_t workers = 1;
    // Stop drawing at a size once one drawn set is shattered; Z_m is then a
    // lower bound (it can no longer reach m).
    bool early_break = true;
    bool use_complement_symmetry = false;
};

struct DimensionRecord {
    std::size_t d = 0;
    std::uint64_t m = 0;          // sets drawn (or enumerated) at this size
    std::uint64_t z_m = 0;        // of those, not shattered
    std::uint64_t unresolved = 0; // of those, not shattered only through budget exhaustion
    bool z_is_lower_bound = false;
    // d exceeded the finite domain; nothing was drawn.
    bool short_circuit = false;
    std::optional<std::uint64_t> first_shattered_draw;
    double elapsed_s = 0.0;

    bool stops() const { return z_m == m; }
};

struct VcEstimate {
    // Empty when the loop ran through d_max (infinite VC dimension).
    std::optional<std::size_t> vc;
    bool terminated_at_dmax = false;
    std::vector<DimensionRecord> per_d;
    Certificate certificate;
    std::uint64_t seed = 0;
    std::string class_name;
    std::string sampler;

    bool infinite() const { return !vc.has_value(); }
    // Unresolved draws at the size that stopped the loop.
    std::uint64_t unresolved_at_stop() const;
};

// An oracle failed mid-run; the records completed before it are kept.
class EstimationError : public OracleError {
public:
    EstimationError(VcEstimate partial, const std::string& what)
        : OracleError(what), partial_(std::move(partial)) {}
    const VcEstimate& partial() const { return partial_; }

private:
    VcEstimate partial_;
};

VcEstimate estimate_vcdim(const HypothesisClass& h, const DomainSampler& sampler,
                          const EstimatorOptions& options = {});

} // namespace vcdim
