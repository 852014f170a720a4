#include "doctest.h"

#include "k3/cyclotomic.hpp"
#include "k3/errors.hpp"
#include "k3/padic.hpp"

using namespace k3;

TEST_CASE("square classes") {
    CHECK(class_eq(13, 1, 3));
    CHECK(class_eq(-3, 5, 2));
    CHECK_FALSE(class_eq(-1, 1, 2));
    CHECK(class_eq(2, 1, kInfinity));
    CHECK_FALSE(class_eq(-2, 1, kInfinity));
    CHECK(class_eq(Rat(8, 9), 2, 3));
    CHECK_THROWS_AS(square_class(0, 5), DomainError);
    // class(x y^2) = class(x), and the class counts per place
    for (uint64_t p : {2, 3, 5, 7}) {
        std::vector<SquareClass> seen;
        for (int x = -200; x <= 200; ++x) {
            if (x == 0) continue;
            for (int y : {1, 2, 3, 5})
                CHECK(square_class(Rat(x) * y * y, p) == square_class(x, p));
            auto c = square_class(x, p);
            if (std::find(seen.begin(), seen.end(), c) == seen.end()) seen.push_back(c);
        }
        CHECK(seen.size() == (p == 2 ? 8u : 4u));
    }
}

TEST_CASE("squares mod 32 agree with 2-adic unit classes") {
    for (int u = 1; u < 32; u += 2) {
        bool sq = false;
        for (int y = 1; y < 32; y += 2) sq = sq || (y * y) % 32 == u;
        CHECK(class_eq(u, 1, 2) == sq);
    }
}

TEST_CASE("factor over Q_p examples") {
    auto a = factor_over_Qp(IntPoly{1, -11, 1}, 3);
    REQUIRE(a.size() == 2);
    for (auto& lf : a) {
        CHECK(lf.approx.degree() == 1);
        CHECK(lf.residue == ModPoly(3, {2, 1}));
        CHECK_FALSE(lf.star_symmetric);
    }
    auto b = factor_over_Qp(cyclotomic(9), 3);
    REQUIRE(b.size() == 1);
    CHECK(b[0].residue_degree == 1);
    CHECK(b[0].ramification_index == 6);
    CHECK(b[0].star_symmetric);
    auto c = factor_over_Qp(cyclotomic(12), 5);
    REQUIRE(c.size() == 2);
    for (auto& lf : c) {
        CHECK(lf.residue_degree == 2);
        CHECK(lf.ramification_index == 1);
    }
    CHECK_THROWS_AS(factor_over_Qp(IntPoly{1, 2, 1}, 3), DomainError);
}

TEST_CASE("symbol sets") {
    CHECK(symbol_set(IntPoly{1, -11, 1}, 3).empty());
    auto s = symbol_set(IntPoly{-1, 1}, 7);
    REQUIRE(s.members.size() == 1);
    CHECK(s.members[0] == ModPoly(7, {6, 1}));
}

TEST_CASE("symbol sets of cyclotomics follow the explicit rule") {
    for (uint64_t n = 1; n <= 42; ++n) {
        for (uint64_t p : {2, 3, 5, 7, 11, 13}) {
            CAPTURE(n);
            CAPTURE(p);
            CHECK(symbol_set(cyclotomic(n), p) == cyclo_symbol_set(n, p));
        }
    }
}

TEST_CASE("pi sets") {
    CHECK(pi_set(cyclotomic(12), IntPoly{-1, 1}).primes.empty());
    auto r = pi_set(cyclotomic(3), cyclotomic(6));
    REQUIRE(r.primes.size() == 1);
    CHECK(r.primes[0].p == 2);
    auto t = pi_set(IntPoly{-1, 1}, IntPoly{1, 1});
    REQUIRE(t.primes.size() == 1);
    CHECK(t.primes[0].p == 2);
    auto z = pi_set(cyclotomic(5), cyclotomic(5) * IntPoly{1, 1});
    CHECK(z.shared_factor.has_value());
}

namespace {
#include "padic_cases.inc"
}

TEST_CASE("local degrees and symmetric counts match frozen decompositions") {
    for (auto& lc : kLocalCases) {
        IntPoly q(std::vector<Int>(lc.coeffs.begin(), lc.coeffs.end()));
        CAPTURE(to_string(q));
        CAPTURE(lc.p);
        auto fac = factor_over_Qp(q, lc.p);
        std::vector<std::pair<int, int>> ef;
        int nsym = 0;
        for (auto& lf : fac) {
            ef.emplace_back(lf.ramification_index, lf.residue_degree);
            nsym += lf.star_symmetric;
            CHECK(lf.reduction == pow(lf.residue, lf.reduction_exponent));
        }
        std::sort(ef.begin(), ef.end());
        CHECK(ef == lc.ef);
        if (lc.nsym >= 0) CHECK(nsym == lc.nsym);
    }
}
