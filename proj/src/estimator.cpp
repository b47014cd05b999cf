#include "vcdim/estimator.hpp"

#include "vcdim/combinatorics.hpp"
#include "vcdim/parallel.hpp"
#include "vcdim/shattering.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <sstream>

namespace vcdim {

// ─── Hoeffding ────────────────────────────────────────────────

namespace {

void check_certificate_params(double epsilon, double delta) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw ContractViolation("epsilon must lie in (0, 1)");
    if (!(delta > 0.0 && delta < 1.0))
        throw ContractViolation("delta must lie in (0, 1)");
}

} // namespace

bool hoeffding_guarantee_holds(std::uint64_t m, double epsilon, double delta) {
    const long double e = epsilon;
    const long double bound = 2.0L * std::exp(-2.0L * static_cast<long double>(m) * e * e);
    return bound <= static_cast<long double>(delta) * (1.0L + kHoeffdingRelativeSlack);
}

std::uint64_t hoeffding_sample_size(double epsilon, double delta) {
    check_certificate_params(epsilon, delta);
    const long double e = epsilon;
    const long double x = std::log(2.0L / static_cast<long double>(delta)) / (2.0L * e * e);
    auto m = static_cast<std::uint64_t>(std::max(1.0L, std::ceil(x)));
    // The closed form is exact in the reals; nudge across float rounding.
    while (m > 1 && hoeffding_guarantee_holds(m - 1, epsilon, delta))
        --m;
    while (!hoeffding_guarantee_holds(m, epsilon, delta))
        ++m;
    return m;
}

Certificate Certificate::make(double epsilon, double delta) {
    return {epsilon, delta, hoeffding_sample_size(epsilon, delta)};
}

// ─── Sampling ─────────────────────────────────────────────────

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Independent stream per (seed, d, draw).
std::mt19937_64 substream(std::uint64_t seed, std::size_t d, std::uint64_t draw) {
    std::uint64_t k = splitmix64(seed);
    k = splitmix64(k ^ static_cast<std::uint64_t>(d));
    k = splitmix64(k ^ draw);
    return std::mt19937_64(k);
}

// [0, 1) with 53 random bits; portable across standard libraries.
double unit_double(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

// Uniform on [0, n) by rejection.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    for (;;) {
        const std::uint64_t r = rng();
        if (r < limit)
            return r % n;
    }
}

// Uniform d-subset of {0..n-1} (Floyd's algorithm), ascending.
std::vector<std::size_t> random_subset(std::mt19937_64& rng, std::size_t n, std::size_t d) {
    std::set<std::size_t> chosen;
    for (std::size_t j = n - d; j < n; ++j) {
        const auto t = static_cast<std::size_t>(below(rng, j + 1));
        if (!chosen.insert(t).second)
            chosen.insert(j);
    }
    return {chosen.begin(), chosen.end()};
}

PointSet index_points(const std::vector<std::size_t>& idx) {
    std::vector<Point> pts;
    pts.reserve(idx.size());
    for (auto i : idx)
        pts.push_back(Point::finite(i));
    return PointSet(std::move(pts));
}

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

} // namespace

DomainSampler::DomainSampler(Kind kind, std::uint64_t seed) : kind_(std::move(kind)), seed_(seed) {
    std::visit(overloaded{
                   [](const UniformBox& b) {
                       if (b.lo.empty() || b.lo.size() != b.hi.size())
                           throw ContractViolation("box bounds must be nonempty and of equal length");
                       for (std::size_t j = 0; j < b.lo.size(); ++j)
                           if (!(std::isfinite(b.lo[j]) && std::isfinite(b.hi[j]) && b.lo[j] < b.hi[j]))
                               throw ContractViolation("box bounds need finite lo < hi in every coordinate");
                   },
                   [](const FiniteUniform& f) {
                       if (f.cardinality == 0)
                           throw ContractViolation("finite domain must be nonempty");
                   },
                   [](const Exhaustive& e) {
                       if (e.cardinality == 0)
                           throw ContractViolation("finite domain must be nonempty");
                   },
               },
               kind_);
}

DomainSampler DomainSampler::uniform_box(std::size_t n, double lo, double hi, std::uint64_t seed) {
    return DomainSampler(UniformBox{std::vector<double>(n, lo), std::vector<double>(n, hi)}, seed);
}

DomainSampler DomainSampler::finite_uniform(std::size_t cardinality, std::uint64_t seed) {
    return DomainSampler(FiniteUniform{cardinality}, seed);
}

DomainSampler DomainSampler::exhaustive(std::size_t cardinality, std::uint64_t seed) {
    return DomainSampler(Exhaustive{cardinality}, seed);
}

std::size_t DomainSampler::cardinality() const {
    return std::visit(overloaded{
                          [](const UniformBox&) -> std::size_t {
                              throw ContractViolation("continuous sampler has no cardinality");
                          },
                          [](const FiniteUniform& f) { return f.cardinality; },
                          [](const Exhaustive& e) { return e.cardinality; },
                      },
                      kind_);
}

std::size_t DomainSampler::dimension() const {
    if (auto* b = std::get_if<UniformBox>(&kind_))
        return b->lo.size();
    return 0;
}

bool DomainSampler::enumerates(std::size_t d) const {
    auto* e = std::get_if<Exhaustive>(&kind_);
    return e && d <= e->cardinality && binomial(e->cardinality, d) <= e->cap;
}

std::uint64_t DomainSampler::draws(std::size_t d, std::uint64_t m) const {
    return enumerates(d) ? binomial(cardinality(), d) : m;
}

std::string DomainSampler::describe() const {
    std::ostringstream os;
    os.precision(17);
    std::visit(overloaded{
                   [&](const UniformBox& b) {
                       os << "uniform-box(n=" << b.lo.size() << ", lo=[";
                       for (std::size_t j = 0; j < b.lo.size(); ++j)
                           os << (j ? "," : "") << b.lo[j];
                       os << "], hi=[";
                       for (std::size_t j = 0; j < b.hi.size(); ++j)
                           os << (j ? "," : "") << b.hi[j];
                       os << "])";
                   },
                   [&](const FiniteUniform& f) { os << "finite-uniform(N=" << f.cardinality << ")"; },
                   [&](const Exhaustive& e) {
                       os << "exhaustive(N=" << e.cardinality << ", cap=" << e.cap << ")";
                   },
               },
               kind_);
    return os.str();
}

PointSet sample_domain_set(const DomainSampler& sampler, std::size_t d, std::uint64_t draw_index) {
    if (d == 0)
        throw ContractViolation("sample size d must be positive");
    if (sampler.is_finite() && d > sampler.cardinality())
        throw ContractViolation("cannot draw " + std::to_string(d) + " distinct points from a domain of " +
                                std::to_string(sampler.cardinality()));

    if (sampler.enumerates(d)) {
        const auto count = binomial(sampler.cardinality(), d);
        return index_points(unrank_subset(sampler.cardinality(), d, draw_index % count));
    }
    auto rng = substream(sampler.seed(), d, draw_index);
    if (sampler.is_finite())
        return index_points(random_subset(rng, sampler.cardinality(), d));

    const auto& box = std::get<UniformBox>(sampler.kind());
    const std::size_t n = box.lo.size();
    std::vector<std::vector<double>> coords;
    coords.reserve(d);
    while (coords.size() < d) {
        std::vector<double> x(n);
        for (std::size_t j = 0; j < n; ++j)
            x[j] = box.lo[j] + unit_double(rng) * (box.hi[j] - box.lo[j]);
        if (std::find(coords.begin(), coords.end(), x) == coords.end())
            coords.push_back(std::move(x));
    }
    std::vector<Point> pts;
    pts.reserve(d);
    for (auto& x : coords)
        pts.push_back(Point::continuous(std::move(x)));
    return PointSet(std::move(pts));
}

// ─── Estimation ───────────────────────────────────────────────

std::uint64_t VcEstimate::unresolved_at_stop() const {
    if (per_d.empty() || !per_d.back().stops())
        return 0;
    return per_d.back().unresolved;
}

namespace {

void check_compatible(const HypothesisClass& h, const DomainSampler& sampler) {
    if (h.has_finite_domain() != sampler.is_finite())
        throw ContractViolation("sampler " + sampler.describe() + " does not match the domain of " + h.name());
    if (sampler.is_finite()) {
        if (sampler.cardinality() != h.domain_cardinality())
            throw ContractViolation("sampler domain size " + std::to_string(sampler.cardinality()) +
                                    " differs from the class's " + std::to_string(h.domain_cardinality()));
    } else if (sampler.dimension() != h.dimension()) {
        throw ContractViolation("sampler dimension " + std::to_string(sampler.dimension()) +
                                " differs from the class's " + std::to_string(h.dimension()));
    }
}

enum : std::uint8_t { kPending = 0, kShattered = 1, kNotShattered = 2, kUnresolved = 3 };

} // namespace

VcEstimate estimate_vcdim(const HypothesisClass& h, const DomainSampler& sampler,
                          const EstimatorOptions& options) {
    if (options.d_max < 1)
        throw ContractViolation("d_max must be >= 1");
    check_compatible(h, sampler);

    VcEstimate est;
    est.certificate = Certificate::make(options.epsilon, options.delta);
    est.seed = sampler.seed();
    est.class_name = h.name();
    est.sampler = sampler.describe();
    const std::uint64_t m = est.certificate.sample_size_m;

    for (std::size_t d = 1; d <= options.d_max; ++d) {
        const auto started = std::chrono::steady_clock::now();
        DimensionRecord rec;
        rec.d = d;

        if (sampler.is_finite() && d > sampler.cardinality()) {
            // No d distinct points exist, so VCdim < d for certain.
            rec.m = m;
            rec.z_m = m;
            rec.short_circuit = true;
            est.per_d.push_back(rec);
            est.vc = d - 1;
            return est;
        }

        rec.m = sampler.draws(d, m);
        std::vector<std::uint8_t> status(rec.m, kPending);
        const bool parallel_draws = options.workers > 1 && rec.m > 1;
        ShatterOptions shatter_opts;
        shatter_opts.workers = parallel_draws ? 1 : options.workers;
        shatter_opts.use_complement_symmetry = options.use_complement_symmetry;

        auto search = detail::first_hit(rec.m, parallel_draws ? options.workers : 1, [&](std::uint64_t i) {
            auto points = sample_domain_set(sampler, d, i);
            auto verdict = shatters(h, points, shatter_opts);
            if (verdict.shattered) {
                status[i] = kShattered;
                return options.early_break;
            }
            status[i] = verdict.unresolved ? kUnresolved : kNotShattered;
            return false;
        });

        if (search.error) {
            std::string what = "oracle failure";
            try {
                std::rethrow_exception(search.error);
            } catch (const std::exception& e) {
                what = e.what();
            }
            throw EstimationError(est, "d=" + std::to_string(d) + ", draw " +
                                           std::to_string(*search.error_index) + ": " + what);
        }

        const std::uint64_t limit = search.hit ? *search.hit : rec.m;
        for (std::uint64_t i = 0; i < limit; ++i) {
            rec.z_m += status[i] != kShattered;
            rec.unresolved += status[i] == kUnresolved;
        }
        if (search.hit) {
            rec.first_shattered_draw = *search.hit;
            rec.z_is_lower_bound = *search.hit + 1 < rec.m;
        } else {
            for (std::uint64_t i = 0; i < rec.m; ++i)
                if (status[i] == kShattered) {
                    rec.first_shattered_draw = i;
                    break;
                }
        }
        rec.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        est.per_d.push_back(rec);

        if (rec.stops()) {
            est.vc = d - 1;
            return est;
        }
    }
    est.terminated_at_dmax = true;
    return est;
}

} // namespace vcdim
