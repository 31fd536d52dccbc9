#include "superchar/oracle.hpp"

#include "superchar/symfunc.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

using namespace superchar;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

std::vector<Rational> rv(std::vector<std::pair<long, long>> entries) {
    std::vector<Rational> out;
    for (auto [num, den] : entries) out.push_back(make_rational(num, den));
    return out;
}

}  // namespace

TEST_CASE("root system data") {
    auto b3 = RootSystemData::make(Series::B, 3);
    CHECK(b3.positive_roots.size() == 9);
    CHECK(b3.rho == rv({{5, 2}, {3, 2}, {1, 2}}));

    auto d4 = RootSystemData::make(Series::D, 4);
    CHECK(d4.positive_roots.size() == 12);
    CHECK(d4.rho == rv({{3, 1}, {2, 1}, {1, 1}, {0, 1}}));

    CHECK_THROWS_AS(RootSystemData::make(Series::D, 1), std::invalid_argument);
}

TEST_CASE("dynkin_to_epsilon") {
    using A = DynkinLabels::Algebra;
    CHECK(dynkin_to_epsilon(Series::D, 4, DynkinLabels::fork(A::Dk, 4, 0, 1)) ==
          rv({{1, 2}, {1, 2}, {1, 2}, {1, 2}}));
    CHECK(dynkin_to_epsilon(Series::D, 4, DynkinLabels::fork(A::Dk, 4, 2, 3)) ==
          rv({{3, 2}, {3, 2}, {3, 2}, {-1, 2}}));
    CHECK(dynkin_to_epsilon(Series::B, 3, DynkinLabels::rectangle(A::Bk, 3, 2)) ==
          rv({{1, 1}, {1, 1}, {1, 1}}));
    CHECK(dynkin_to_epsilon(Series::D, 4, DynkinLabels::fork(A::Dk, 4, 3, 3)) ==
          rv({{3, 2}, {3, 2}, {3, 2}, {-3, 2}}));
    CHECK_THROWS_AS(DynkinLabels(DynkinLabels::Algebra::Dk, {1, 0, 0, 2}),
                    std::invalid_argument);
}

TEST_CASE("freudenthal: chiral spinor of so(8)") {
    auto table = freudenthal_table(Series::D, 4, rv({{1, 2}, {1, 2}, {1, 2}, {1, 2}}));
    CHECK(table.mult.size() == 8);
    CHECK(table.total_multiplicity() == 8);
    for (const auto& [w, m] : table.mult) {
        CHECK(m == 1);
        int minus = 0;
        for (const auto& c : w) {
            CHECK((c == make_rational(1, 2) || c == make_rational(-1, 2)));
            if (c < 0) ++minus;
        }
        CHECK(minus % 2 == 0);
    }
}

TEST_CASE("freudenthal: so(7) examples") {
    auto spinor = freudenthal_table(Series::B, 3, rv({{1, 2}, {1, 2}, {1, 2}}));
    CHECK(spinor.total_multiplicity() == 8);
    CHECK(spinor.mult.size() == 8);  // all sign patterns this time

    auto table = freudenthal_table(Series::B, 3, rv({{1, 1}, {1, 1}, {1, 1}}));
    CHECK(table.total_multiplicity() == 35);
    // zero weight of the 35-dimensional module has multiplicity 3
    CHECK(table.mult.at(rv({{0, 1}, {0, 1}, {0, 1}})) == 3);
}

TEST_CASE("freudenthal: trivial module") {
    auto table = freudenthal_table(Series::B, 2, rv({{0, 1}, {0, 1}}));
    CHECK(table.mult.size() == 1);
    CHECK(table.total_multiplicity() == 1);
}

TEST_CASE("freudenthal rejects bad weights") {
    CHECK_THROWS_AS(freudenthal_table(Series::B, 2, rv({{1, 1}, {2, 1}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(freudenthal_table(Series::B, 2, rv({{1, 1}, {1, 2}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(freudenthal_table(Series::B, 2, rv({{1, 3}, {1, 3}})),
                    std::invalid_argument);
}

TEST_CASE("weight tables are Weyl symmetric with Weyl-dimension mass") {
    struct Case {
        Series s;
        int k;
        std::vector<Rational> hw;
    };
    std::vector<Case> cases = {
        {Series::B, 2, rv({{3, 2}, {1, 2}})},
        {Series::B, 3, rv({{1, 1}, {1, 1}, {1, 1}})},
        {Series::D, 3, rv({{1, 1}, {1, 1}, {0, 1}})},
        {Series::D, 4, rv({{3, 2}, {3, 2}, {3, 2}, {-1, 2}})},
    };
    for (const auto& c : cases) {
        auto table = freudenthal_table(c.s, c.k, c.hw);
        CHECK(table.total_multiplicity() == weyl_dim(c.s, c.k, c.hw));
        CHECK(table.mult.at(c.hw) == 1);

        for (const auto& [w, m] : table.mult) {
            // coordinate permutations
            std::vector<Rational> sorted = w;
            std::sort(sorted.begin(), sorted.end());
            do {
                CHECK(table.mult.at(sorted) == m);
            } while (std::next_permutation(sorted.begin(), sorted.end()));
            // sign flips: all for B, pairwise for D
            if (c.s == Series::B) {
                for (std::size_t i = 0; i < w.size(); ++i) {
                    auto flipped = w;
                    flipped[i] = -flipped[i];
                    CHECK(table.mult.at(flipped) == m);
                }
            } else {
                auto flipped = w;
                flipped[0] = -flipped[0];
                flipped[1] = -flipped[1];
                CHECK(table.mult.at(flipped) == m);
            }
        }
    }
}

TEST_CASE("weyl_dim examples") {
    using A = DynkinLabels::Algebra;
    CHECK(weyl_dim(Series::B, 3,
                   dynkin_to_epsilon(Series::B, 3, DynkinLabels::rectangle(A::Bk, 3, 1))) == 8);
    CHECK(weyl_dim(Series::D, 4,
                   dynkin_to_epsilon(Series::D, 4, DynkinLabels::fork(A::Dk, 4, 0, 2))) == 35);
    CHECK(weyl_dim(Series::B, 2, rv({{0, 1}, {0, 1}})) == 1);
    // Weyl dimension equals the label-sum of gl dimensions
    BigCount total = 0;
    for (const Term& t : char_so_even_fork(4, 0, 2).terms) total += gl_dim(t.partition, 4);
    CHECK(total == 35);
}

TEST_CASE("schur_expand examples") {
    SUBCASE("so(8) chiral spinor") {
        auto table = freudenthal_table(Series::D, 4, rv({{1, 2}, {1, 2}, {1, 2}, {1, 2}}));
        auto expansion = schur_expand(table, make_rational(1, 2), 4);
        REQUIRE(expansion.size() == 3);
        CHECK(expansion[0].first == Partition());
        CHECK(expansion[1].first == P({1, 1}));
        CHECK(expansion[2].first == P({1, 1, 1, 1}));
        for (const auto& [lambda, c] : expansion) CHECK(c == 1);
    }
    SUBCASE("so(8) fork [0,0,2,1]") {
        auto table =
            freudenthal_table(Series::D, 4, rv({{3, 2}, {3, 2}, {3, 2}, {-1, 2}}));
        auto expansion = schur_expand(table, make_rational(3, 2), 4);
        auto expected = char_so_even_fork(4, 2, 3);
        REQUIRE(expansion.size() == expected.terms.size());
        for (std::size_t i = 0; i < expansion.size(); ++i) {
            CHECK(expansion[i].first == expected.terms[i].partition);
            CHECK(expansion[i].second == 1);
        }
    }
    SUBCASE("trivial table") {
        auto table = freudenthal_table(Series::D, 2, rv({{0, 1}, {0, 1}}));
        auto expansion = schur_expand(table, Rational(0), 2);
        REQUIRE(expansion.size() == 1);
        CHECK(expansion[0].first == Partition());
        CHECK(expansion[0].second == 1);
    }
}

namespace {

// Re-expands coeff * s_lambda back into monomials by walking tableaux and
// compares against the shifted weight table, entry for entry.
void check_rebuild(Series s, int k, const std::vector<Rational>& hw, const Rational& shift) {
    auto table = freudenthal_table(s, k, hw);
    auto expansion = schur_expand(table, shift, k);

    std::map<std::vector<Rational>, BigCount> rebuilt;
    for (const auto& [lambda, coeff] : expansion) {
        std::vector<std::vector<int>> tab(lambda.length());
        for (int i = 0; i < lambda.length(); ++i) tab[i].assign(lambda.part(i + 1), 0);
        std::vector<int> content(k, 0);
        const BigCount& c = coeff;
        std::function<void(int, int)> fill = [&](int i, int j) {
            if (i == lambda.length()) {
                std::vector<Rational> key;
                for (int e : content) key.push_back(Rational(e) - shift);
                rebuilt[key] += c;
                return;
            }
            int ni = i, nj = j + 1;
            if (nj >= lambda.part(i + 1)) {
                ni = i + 1;
                nj = 0;
            }
            int lo = 1;
            if (j > 0) lo = std::max(lo, tab[i][j - 1]);
            if (i > 0) lo = std::max(lo, tab[i - 1][j] + 1);
            for (int v = lo; v <= k; ++v) {
                tab[i][j] = v;
                ++content[v - 1];
                fill(ni, nj);
                --content[v - 1];
            }
            tab[i][j] = 0;
        };
        if (lambda.length() == 0) {
            std::vector<Rational> key;
            for (int e : content) key.push_back(Rational(e) - shift);
            rebuilt[key] += c;
        } else {
            fill(0, 0);
        }
    }
    CHECK(rebuilt.size() == table.mult.size());
    for (const auto& [w, m] : table.mult) {
        REQUIRE(rebuilt.count(w) == 1);
        CHECK(rebuilt.at(w) == m);
    }
}

}  // namespace

TEST_CASE("schur_expand is exact: monomials rebuild the shifted table") {
    check_rebuild(Series::D, 3, rv({{1, 1}, {1, 1}, {0, 1}}), Rational(1));
    check_rebuild(Series::D, 4, rv({{3, 2}, {3, 2}, {3, 2}, {-1, 2}}), make_rational(3, 2));
    check_rebuild(Series::B, 3, rv({{1, 1}, {1, 1}, {1, 1}}), Rational(1));
    check_rebuild(Series::B, 2, rv({{3, 2}, {1, 2}}), make_rational(3, 2));
}

TEST_CASE("schur_expand input validation") {
    WeightMultiplicityTable table;
    table.highest_weight = rv({{1, 1}, {0, 1}});
    table.mult[rv({{1, 1}, {0, 1}})] = 1;  // not symmetric: missing (0,1)
    CHECK_THROWS_AS(schur_expand(table, Rational(0), 2), std::invalid_argument);

    WeightMultiplicityTable halves;
    halves.highest_weight = rv({{1, 2}, {1, 2}});
    halves.mult[rv({{1, 2}, {1, 2}})] = 1;
    CHECK_THROWS_AS(schur_expand(halves, Rational(0), 2), std::invalid_argument);

    WeightMultiplicityTable negatives;
    negatives.highest_weight = rv({{1, 1}, {-1, 1}});
    negatives.mult[rv({{1, 1}, {-1, 1}})] = 1;
    CHECK_THROWS_AS(schur_expand(negatives, Rational(0), 2), std::invalid_argument);
}

TEST_CASE("verify_theorem1 sample points") {
    CHECK(verify_theorem1(4, 1, 2).passed);
    CHECK(verify_theorem1(3, 0, 1).passed);
    CHECK(verify_theorem1(2, 1, 1).passed);
    CHECK(verify_theorem1(5, 1, 2).passed);  // one point past the standard grid
    CHECK_THROWS_AS(verify_theorem1(1, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem1(4, 3, 2), std::invalid_argument);
}

TEST_CASE("verify_rectangle_characters sample points") {
    CHECK(verify_rectangle_characters(Series::B, 3, 2).passed);
    CHECK(verify_rectangle_characters(Series::D, 4, 2).passed);
    CHECK(verify_rectangle_characters(Series::D, 3, 1).passed);
    CHECK(verify_rectangle_characters(Series::B, 1, 3).passed);  // so(3) degenerate rank
}

TEST_CASE("rectangle oracle grid") {
    for (int k = 1; k <= 3; ++k)
        for (int p = 0; p <= 3; ++p) CHECK(verify_rectangle_characters(Series::B, k, p).passed);
    for (int k : {2, 3, 4})
        for (int p = 0; p <= 2; ++p) CHECK(verify_rectangle_characters(Series::D, k, p).passed);
}

TEST_CASE("weyl dimension equals the fork label dimension sum") {
    using A = DynkinLabels::Algebra;
    for (int k : {2, 3, 4})
        for (int p = 0; p <= 2; ++p)
            for (int r = 0; r <= p; ++r) {
                auto hw = dynkin_to_epsilon(Series::D, k, DynkinLabels::fork(A::Dk, k, r, p));
                BigCount total = 0;
                for (const Term& t : char_so_even_fork(k, r, p).terms)
                    total += gl_dim(t.partition, k);
                CHECK(weyl_dim(Series::D, k, hw) == total);
            }
    for (int k : {1, 2, 3})
        for (int p = 0; p <= 3; ++p) {
            auto hw = dynkin_to_epsilon(Series::B, k, DynkinLabels::rectangle(A::Bk, k, p));
            BigCount total = 0;
            for (const Term& t : char_so_odd(k, p).terms) total += gl_dim(t.partition, k);
            CHECK(weyl_dim(Series::B, k, hw) == total);
        }
}
