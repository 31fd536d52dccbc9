#include "superchar/specialize.hpp"

#include "superchar/json_io.hpp"
#include "superchar/symfunc.hpp"

#include <doctest.h>

#include <vector>

using namespace superchar;

namespace {

std::vector<long> coeffs_of(const TruncatedSeries& s) {
    std::vector<long> out;
    for (long d = 0; d <= s.trunc(); ++d) out.push_back(s.coeff(d).get_si());
    return out;
}

}  // namespace

TEST_CASE("so(7) t-dimension polynomials (third printed line read as p = 3)") {
    CHECK(coeffs_of(t_dimension(char_so_odd(3, 1), 3)) == std::vector<long>{1, 3, 3, 1});
    CHECK(coeffs_of(t_dimension(char_so_odd(3, 2), 6)) ==
          std::vector<long>{1, 3, 9, 9, 9, 3, 1});
    // the source lists this degree-9 polynomial under a repeated [0,0,2]
    // heading; it is the p = 3 rectangle
    CHECK(coeffs_of(t_dimension(char_so_odd(3, 3), 9)) ==
          std::vector<long>{1, 3, 9, 19, 24, 24, 19, 9, 3, 1});
    CHECK(coeffs_of(t_dimension(char_so_odd(3, 0), 3)) == std::vector<long>{1, 0, 0, 0});
}

TEST_CASE("rectangle t-dimensions are palindromic") {
    for (int k = 1; k <= 4; ++k)
        for (int p = 0; p <= 3; ++p) {
            long full = static_cast<long>(k) * p;
            auto s = t_dimension(char_so_odd(k, p), full);
            for (long d = 0; d <= full; ++d) CHECK(s.coeff(d) == s.coeff(full - d));
        }
}

TEST_CASE("osp(1|6) t-dimension series") {
    CHECK(coeffs_of(t_dimension(char_osp1(3, 1, 4), 4)) ==
          std::vector<long>{1, 3, 6, 10, 15});
    CHECK(coeffs_of(t_dimension(char_osp1(3, 2, 4), 4)) ==
          std::vector<long>{1, 3, 9, 18, 36});
    CHECK(coeffs_of(t_dimension(char_osp1(3, 3, 4), 4)) ==
          std::vector<long>{1, 3, 9, 19, 39});
}

TEST_CASE("osp(1|6) label sums match the closed forms through degree 12") {
    const long D = 12;
    auto p1 = TruncatedSeries::from_product("t", {}, {1, 1, 1}, D);
    auto p2 = TruncatedSeries::from_product("t", {3}, {1, 1, 1, 2, 2, 2}, D);
    auto p3 = TruncatedSeries::from_product("t", {}, {1, 1, 1, 2, 2, 2}, D);
    CHECK(t_dimension(char_osp1(3, 1, D), D) == p1);
    CHECK(t_dimension(char_osp1(3, 2, D), D) == p2);
    CHECK(t_dimension(char_osp1(3, 3, D), D) == p3);
}

TEST_CASE("t_dimension cutoff handling") {
    CHECK_THROWS_AS(t_dimension(char_osp1(3, 2, 4), 6), std::domain_error);
    // complete families pad with zeros past their top weight
    auto s = t_dimension(char_so_odd(2, 1), 6);
    CHECK(coeffs_of(s) == std::vector<long>{1, 2, 1, 0, 0, 0, 0});
}

TEST_CASE("t_superdimension examples") {
    // osp(2n+1|2n): identically one
    for (int p = 0; p <= 2; ++p)
        CHECK(coeffs_of(t_superdimension(char_osp_odd(2, 2, p, 6), 6)) ==
              std::vector<long>{1, 0, 0, 0, 0, 0, 0});
    // osp(5|2) [0,0,2] against so(3) [2]
    CHECK(coeffs_of(t_superdimension(char_osp_odd(2, 1, 2, 2), 2)) ==
          std::vector<long>{1, 1, 1});
    // osp(6|2) [0,0,1] against so(4) [0,1]
    CHECK(coeffs_of(t_superdimension(char_osp_even(3, 1, 1, 2), 2)) ==
          std::vector<long>{1, 0, 1});
}

TEST_CASE("t_superdimension rejects plain-Schur families") {
    CHECK_THROWS_AS(t_superdimension(char_so_odd(3, 1), 3), std::domain_error);
    CHECK_THROWS_AS(t_superdimension(char_osp1(2, 1, 4), 4), std::domain_error);
}

TEST_CASE("qdim_so_odd") {
    SUBCASE("p = 0 is the constant series") {
        CHECK(coeffs_of(qdim_so_odd(3, 0)) == std::vector<long>{1});
    }
    SUBCASE("so(7) p = 1 matches the root-system product") {
        auto direct = qdim_so_odd(3, 1);
        auto product =
            TruncatedSeries::from_product("q", {6, 5, 4, 4, 3, 2}, {5, 4, 3, 3, 2, 1}, 6);
        CHECK(direct == product);
    }
    SUBCASE("coefficient sums are the Weyl dimensions") {
        long sums[] = {8, 35, 112};
        for (int p = 1; p <= 3; ++p) {
            auto s = qdim_so_odd(3, p);
            BigCount total = 0;
            for (long d = 0; d <= s.trunc(); ++d) total += s.coeff(d);
            CHECK(total == sums[p - 1]);
        }
    }
    SUBCASE("so(3) smallest case: 1 + q") {
        CHECK(coeffs_of(qdim_so_odd(1, 1)) == std::vector<long>{1, 1});
    }
    SUBCASE("so(5) matches its root-system product") {
        for (int p = 1; p <= 3; ++p) {
            auto direct = qdim_so_odd(2, p);
            auto product = TruncatedSeries::from_product(
                "q", {p + 3, p + 2, p + 1}, {3, 2, 1}, 3L * p);
            CHECK(direct == product);
        }
    }
    SUBCASE("explicit truncation") {
        auto full = qdim_so_odd(3, 2);
        auto cut = qdim_so_odd(3, 2, 4);
        REQUIRE(cut.trunc() == 4);
        for (long d = 0; d <= 4; ++d) CHECK(cut.coeff(d) == full.coeff(d));
    }
    SUBCASE("palindromic") {
        auto s = qdim_so_odd(3, 2);
        for (long d = 0; d <= s.trunc(); ++d) CHECK(s.coeff(d) == s.coeff(s.trunc() - d));
    }
}

TEST_CASE("verify_superdim_identity registry") {
    IdentityParams P;

    SUBCASE("B-case1") {
        P.n = 2;
        P.p = 3;
        CHECK(verify_superdim_identity("B-case1", P, 10).passed);
    }
    SUBCASE("B-case2") {
        P.n = 1;
        P.k = 1;
        P.p = 2;
        auto r = verify_superdim_identity("B-case2", P, 4);
        CHECK(r.passed);
    }
    SUBCASE("B-case3 alternating series") {
        P.m = 1;
        P.n = -1;
        P.k = 1;
        P.p = 1;
        auto r = verify_superdim_identity("B-case3", P, 6);
        CHECK(r.passed);
        // the underlying series really is 1, -1, 1, -1, ...
        auto lhs = t_superdimension(char_osp_odd(1, 2, 1, 6), 6);
        CHECK(coeffs_of(lhs) == std::vector<long>{1, -1, 1, -1, 1, -1, 1});
    }
    SUBCASE("D-even / D-odd") {
        P.n = 1;
        P.k = 2;
        P.p = 2;
        CHECK(verify_superdim_identity("D-even", P, 8).passed);
        P.k = 3;
        CHECK(verify_superdim_identity("D-odd", P, 8).passed);
        CHECK_THROWS_AS(verify_superdim_identity("D-even", P, 8), std::invalid_argument);
    }
    SUBCASE("D-fork-conj") {
        P.n = 1;
        P.k = 2;
        P.r = 1;
        P.p = 2;
        CHECK(verify_superdim_identity("D-fork-conj", P, 8).passed);
    }
    SUBCASE("qdim-so7") {
        for (int p = 1; p <= 3; ++p) {
            P.p = p;
            CHECK(verify_superdim_identity("qdim-so7", P, -1).passed);
        }
    }
    SUBCASE("unknown identity") {
        CHECK_THROWS_AS(verify_superdim_identity("nope", P, 4), std::invalid_argument);
    }
}

TEST_CASE("report JSON shape") {
    IdentityParams P;
    P.n = 2;
    P.p = 1;
    auto j = to_json(verify_superdim_identity("B-case1", P, 6));
    CHECK(j["identity"] == "B-case1");
    CHECK(j["status"] == "pass");
    CHECK_FALSE(j.contains("first_mismatch"));

    VerificationReport fail{"demo", "p=1", false, "degree 2: lhs=1 rhs=0", ""};
    auto f = to_json(fail);
    CHECK(f["status"] == "fail");
    CHECK(f["first_mismatch"] == "degree 2: lhs=1 rhs=0");
}

TEST_CASE("series JSON shape") {
    auto j = to_json(t_dimension(char_so_odd(3, 3), 9));
    CHECK(j["variable"] == "t");
    CHECK(j["trunc"] == 9);
    std::vector<std::string> expect = {"1", "3", "9", "19", "24", "24", "19", "9", "3", "1"};
    CHECK(j["coeffs"] == nlohmann::json(expect));
}
