#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "vcdim/exact.hpp"
#include "vcdim/shattering.hpp"

using namespace vcdim;
using namespace vcdim::testing;

namespace {

std::optional<std::vector<std::size_t>> cols(std::initializer_list<std::size_t> c) {
    return std::vector<std::size_t>(c);
}

} // namespace

TEST_CASE("exact: examples") {
    CHECK(exact_vcdim_matrix(ConceptMatrix({"00", "01", "10", "11"})) == 2);
    CHECK(exact_vcdim_matrix(ConceptMatrix({"000", "110", "101", "011"})) == 2);
    CHECK(exact_vcdim_matrix(ConceptMatrix({"0110"})) == 0);
    CHECK(exact_vcdim_matrix(ConceptMatrix({"00", "00", "00"})) == 0);
}

TEST_CASE("exact: witnesses") {
    ConceptMatrix full({"00", "01", "10", "11"});
    ConceptMatrix diag({"00", "11"});
    CHECK(exact_shattered_witness(full, 2) == cols({0, 1}));
    CHECK(exact_shattered_witness(diag, 1) == cols({0}));
    CHECK_FALSE(exact_shattered_witness(diag, 2).has_value());

    // Column 0 is constant, so the first shattered single column is 1.
    ConceptMatrix m({"001", "011", "000"});
    CHECK(exact_shattered_witness(m, 1) == cols({1}));
    // On columns 1 and 2 the pattern 10 never occurs.
    CHECK_FALSE(exact_shattered_witness(m, 2).has_value());
    CHECK_THROWS_AS(exact_shattered_witness(m, 0), ContractViolation);
    CHECK_FALSE(exact_shattered_witness(m, 4).has_value());
}

TEST_CASE("exact: ascending search matches the full subset scan") {
    for (const auto& m : matrix_corpus(150, 55)) {
        const auto v = exact_vcdim_matrix(m);
        CHECK(v == brute_vcdim(m));
        CHECK(exact_vcdim_matrix(m, {4}) == v);
        // No shattered subset above v, one at every size up to v.
        for (std::size_t d = 1; d <= m.cols(); ++d) {
            auto w = exact_shattered_witness(m, d);
            CHECK(w.has_value() == (d <= v));
            if (w) {
                CHECK(shatters_matrix_reference(m, *w));
                CHECK(brute_matrix_shatters(m, *w));
            }
        }
    }
}

TEST_CASE("exact: Sauer-Shelah bound on every corpus matrix") {
    for (const auto& m : matrix_corpus(150, 55)) {
        const auto v = exact_vcdim_matrix(m);
        std::uint64_t bound = 0;
        for (std::size_t i = 0; i <= v; ++i)
            bound += choose(m.cols(), i);
        CHECK(m.distinct_rows() <= bound);
    }
}

TEST_CASE("exact: witness is the lexicographically first shattered subset") {
    for (const auto& m : matrix_corpus(60, 77)) {
        for (std::size_t d = 1; d <= std::min<std::size_t>(m.cols(), 4); ++d) {
            std::optional<std::vector<std::size_t>> first;
            std::vector<std::size_t> idx(d);
            for (std::size_t i = 0; i < d; ++i)
                idx[i] = i;
            // Ascending combinations in lexicographic order.
            for (;;) {
                if (brute_matrix_shatters(m, idx)) {
                    first = idx;
                    break;
                }
                std::size_t i = d;
                while (i > 0 && idx[i - 1] == m.cols() - d + i - 1)
                    --i;
                if (i == 0)
                    break;
                ++idx[i - 1];
                for (std::size_t j = i; j < d; ++j)
                    idx[j] = idx[j - 1] + 1;
            }
            CHECK(exact_shattered_witness(m, d) == first);
            CHECK(exact_shattered_witness(m, d, {3}) == first);
        }
    }
}

TEST_CASE("exact: wide matrices") {
    // 24 columns: every pattern over the first 3, constant elsewhere.
    std::vector<std::string> rows;
    for (std::uint64_t y = 0; y < 8; ++y) {
        std::string r = LabelVector::from_index(3, y).to_string();
        for (int j = 0; j < 21; ++j)
            r.push_back('0');
        rows.push_back(r);
    }
    ConceptMatrix m(rows);
    CHECK(exact_vcdim_matrix(m) == 3);
    CHECK(exact_shattered_witness(m, 3) == cols({0, 1, 2}));
}
