#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "vcdim/combinatorics.hpp"
#include "vcdim/concept_matrix.hpp"
#include "vcdim/core.hpp"

#include <random>
#include <sstream>

using namespace vcdim;
using namespace vcdim::testing;

TEST_CASE("empirical loss: perfect predictor is zero") {
    auto s = sample(line_points({0.1, 0.2, 0.3}), "101");
    CHECK(empirical_loss(s.labels(), s) == Loss{0, 3});
    CHECK(empirical_loss(s.labels(), s).is_zero());
}

TEST_CASE("empirical loss: complement of labels, d = 4, is one") {
    auto s = sample(line_points({1, 2, 3, 4}), "0110");
    auto l = empirical_loss(s.labels().complement(), s);
    CHECK(l.numerator == 4);
    CHECK(l.denominator == 4);
    CHECK(l == Loss{1, 1});
}

TEST_CASE("empirical loss: two mismatches out of four is one half") {
    auto s = sample(line_points({1, 2, 3, 4}), "0110");
    auto l = empirical_loss(LabelVector::parse("1111"), s);
    CHECK(l == Loss{1, 2});
    CHECK(l.to_string() == "2/4");
}

TEST_CASE("empirical loss: length mismatch is a contract violation") {
    auto s = sample(line_points({1, 2}), "01");
    CHECK_THROWS_AS(empirical_loss(LabelVector::parse("011"), s), ContractViolation);
}

TEST_CASE("empirical loss equals a direct Hamming count") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t d = 1 + rng() % 20;
        std::vector<double> xs(d);
        for (std::size_t i = 0; i < d; ++i)
            xs[i] = double(i);
        std::vector<Point> pts;
        for (double x : xs)
            pts.push_back(Point::continuous({x}));
        auto y = LabelVector::from_index(d, rng() % (std::uint64_t{1} << d));
        auto p = LabelVector::from_index(d, rng() % (std::uint64_t{1} << d));
        LabeledSample s{PointSet(pts), y};
        std::size_t direct = 0;
        for (std::size_t i = 0; i < d; ++i)
            direct += p[i] != y[i];
        auto l = empirical_loss(p, s);
        CHECK(l.numerator == direct);
        CHECK(l.denominator == d);
        CHECK(hamming_distance(p, y) == direct);
    }
}

TEST_CASE("label vectors: parse, index round trip, complement") {
    auto v = LabelVector::parse("0110");
    CHECK(v.size() == 4);
    CHECK(v.to_index() == 6);
    CHECK(LabelVector::from_index(4, 6) == v);
    CHECK(v.complement().to_string() == "1001");
    CHECK(v.count_ones() == 2);
    CHECK_THROWS_AS(LabelVector::parse("01x"), ContractViolation);
    CHECK_THROWS_AS(LabelVector::from_index(0, 0), ContractViolation);
    CHECK_THROWS_AS(LabelVector::from_index(2, 4), ContractViolation);
    for (std::uint64_t i = 0; i < 32; ++i)
        CHECK(LabelVector::from_index(5, i).to_index() == i);
}

TEST_CASE("point sets reject duplicates and mixed kinds") {
    CHECK_THROWS_AS(line_points({0.5, 0.5}), ContractViolation);
    CHECK_THROWS_AS(PointSet({}), ContractViolation);
    CHECK_THROWS_AS(PointSet({Point::continuous({1.0}), Point::continuous({1.0, 2.0})}), ContractViolation);
    CHECK_THROWS_AS(PointSet({Point::continuous({1.0}), Point::finite(0)}), ContractViolation);
    CHECK_THROWS_AS(index_set({2, 0, 2}), ContractViolation);
    CHECK_THROWS_AS(Point::continuous({}), ContractViolation);
    CHECK_NOTHROW(index_set({2, 0, 1}));
}

TEST_CASE("labeled sample requires matching lengths") {
    CHECK_THROWS_AS(sample(line_points({0.1, 0.2}), "1"), ContractViolation);
}

TEST_CASE("point set subset keeps order") {
    auto pts = line_points({0.1, 0.2, 0.3, 0.4});
    std::vector<std::size_t> pos = {3, 1};
    auto sub = pts.subset(pos);
    REQUIRE(sub.size() == 2);
    CHECK(sub[0].coordinates()[0] == 0.4);
    CHECK(sub[1].coordinates()[0] == 0.2);
}

TEST_CASE("certify_outcome rejects inconsistent outcomes") {
    auto s = sample(line_points({0.1, 0.2}), "10");
    ErmOutcome ok{0, 2, s.labels(), false, true, std::nullopt};
    CHECK_NOTHROW(certify_outcome(ok, s));

    ErmOutcome no_predictions{0, 2, std::nullopt, false, true, std::nullopt};
    CHECK_THROWS_AS(certify_outcome(no_predictions, s), OracleError);

    ErmOutcome wrong_predictions{0, 2, LabelVector::parse("11"), false, true, std::nullopt};
    CHECK_THROWS_AS(certify_outcome(wrong_predictions, s), OracleError);

    ErmOutcome too_big{3, 2, std::nullopt, false, true, std::nullopt};
    CHECK_THROWS_AS(certify_outcome(too_big, s), OracleError);

    ErmOutcome miscounted{2, 2, LabelVector::parse("11"), false, true, std::nullopt};
    CHECK_THROWS_AS(certify_outcome(miscounted, s), OracleError);
}

TEST_CASE("binomial and subset unranking") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(3, 4) == 0);
    CHECK(binomial(62, 31) == choose(62, 31));
    CHECK(binomial(200, 100) == UINT64_MAX);

    for (std::size_t n = 1; n <= 8; ++n)
        for (std::size_t k = 1; k <= n; ++k) {
            std::vector<std::size_t> cur(k);
            for (std::size_t i = 0; i < k; ++i)
                cur[i] = i;
            std::uint64_t rank = 0;
            do {
                CHECK(unrank_subset(n, k, rank) == cur);
                ++rank;
            } while (next_combination(cur, n));
            CHECK(rank == choose(n, k));
        }
}

TEST_CASE("concept matrix text format") {
    std::istringstream in("3 2\n00\n01\n10\n\n");
    auto m = read_concept_matrix(in);
    CHECK(m.rows() == 3);
    CHECK(m.cols() == 2);
    CHECK(m.at(1, 1) == 1);
    CHECK(m.row_string(2) == "10");

    std::ostringstream out;
    write_concept_matrix(out, m);
    std::istringstream back(out.str());
    CHECK(read_concept_matrix(back) == m);
}

TEST_CASE("concept matrix parse errors carry line numbers") {
    auto line_of = [](const char* text) -> std::size_t {
        std::istringstream in(text);
        try {
            read_concept_matrix(in);
        } catch (const MatrixParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("") == 1);
    CHECK(line_of("2 x\n00\n11\n") == 1);
    CHECK(line_of("2 2\n00\n1\n") == 3);
    CHECK(line_of("2 2\n00\n12\n") == 3);
    CHECK(line_of("3 2\n00\n11\n") == 4);
    CHECK(line_of("1 2\n00\n11\n") == 3);
}

TEST_CASE("concept matrix canonicalization drops duplicate rows") {
    ConceptMatrix m({"01", "10", "01", "11", "10"});
    CHECK(m.distinct_rows() == 3);
    auto c = m.canonicalized();
    CHECK(c.rows() == 3);
    CHECK(c.row_string(0) == "01");
    CHECK(c.row_string(1) == "10");
    CHECK(c.row_string(2) == "11");
}
