#include "doctest.h"

#include <random>

#include "k3/cyclotomic.hpp"
#include "k3/errors.hpp"
#include "k3/intpoly.hpp"

using namespace k3;

namespace {
const IntPoly kLehmer = parse_poly("coeffs:1,1,0,-1,-1,-1,-1,-1,0,1,1");
}

TEST_CASE("parse and render") {
    IntPoly f = parse_poly("X^4 - X^2 + 1");
    CHECK(f == IntPoly{1, 0, -1, 0, 1});
    CHECK(to_string(f) == "X^4 - X^2 + 1");
    CHECK(parse_poly("coeffs:1,0,-1,0,1") == f);
    CHECK(to_string(parse_poly("-2X^3 + 5")) == "-2X^3 + 5");
    CHECK(to_string(IntPoly{-1, 1}) == "X - 1");
    CHECK(parse_poly(to_string(kLehmer)) == kLehmer);
    CHECK_THROWS_AS(parse_poly("X^^2"), DomainError);
    CHECK_THROWS_AS(parse_poly("coeffs:1,,2"), DomainError);
}

TEST_CASE("star involution") {
    CHECK(star(IntPoly{1, 0, -1, 0, 1}) == RatPoly(IntPoly{1, 0, -1, 0, 1}));
    CHECK(star(IntPoly{-1, 1}) == RatPoly(IntPoly{-1, 1}));
    CHECK(star(IntPoly{-2, 1}) == RatPoly({Rat(-1, 2), Rat(1)}));
    CHECK_THROWS_AS(star(IntPoly{0, 1}), DomainError);
    CHECK(classify_symmetry(IntPoly{1, -3, 1}) == Symmetry::plus);
    CHECK(classify_symmetry(IntPoly{-1, 1}) == Symmetry::minus);
    CHECK(classify_symmetry(IntPoly{2, 1, 1}) == Symmetry::none);
}

TEST_CASE("trace polynomial") {
    CHECK(trace_polynomial(IntPoly{1, 0, -1, 0, 1}) == IntPoly{-3, 0, 1});
    CHECK(trace_polynomial(IntPoly{1, 0, 1}) == IntPoly{0, 1});
    IntPoly h = trace_polynomial(kLehmer);
    CHECK(h.degree() == 5);
    CHECK(symmetric_lift(h) == kLehmer);
    CHECK_THROWS_AS(trace_polynomial(IntPoly{1, 1, 1, 1}), DomainError);
}

TEST_CASE("resultant") {
    CHECK(resultant(cyclotomic(12), IntPoly{-1, 1}) == 1);
    CHECK(resultant(IntPoly{1, 1}, IntPoly{-1, 1}) == -2);
    CHECK(resultant(cyclotomic(6), cyclotomic(3)) == 4);
    CHECK(resultant(kLehmer, kLehmer) == 0);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> c(-5, 5), dg(1, 6);
    auto rnd = [&] {
        std::vector<Int> v(dg(rng) + 1);
        for (auto& x : v) x = c(rng);
        v.back() = 1;
        return IntPoly(v);
    };
    for (int t = 0; t < 50; ++t) {
        IntPoly f = rnd(), g1 = rnd(), g2 = rnd();
        int sgn = (f.degree() * g1.degree()) % 2 ? -1 : 1;
        CHECK(resultant(f, g1) == sgn * resultant(g1, f));
        CHECK(resultant(f, g1 * g2) == resultant(f, g1) * resultant(f, g2));
    }
}

TEST_CASE("factor over Q") {
    IntPoly f = pow(IntPoly{-1, 1}, 4) * cyclotomic(12);
    auto fac = factor_over_Q(f);
    REQUIRE(fac.size() == 2);
    CHECK(fac[0].f == IntPoly{-1, 1});
    CHECK(fac[0].mult == 4);
    CHECK(fac[1].f == cyclotomic(12));
    CHECK(factor_over_Q(cyclotomic(12)).size() == 1);
    auto g = factor_over_Q(IntPoly{-1, 0, 1});
    REQUIRE(g.size() == 2);
    CHECK(g[0].f == IntPoly{-1, 1});
    CHECK(g[1].f == IntPoly{1, 1});
    CHECK(factor_over_Q(kLehmer).size() == 1);
    // Swinnerton-Dyer style: many modular factors, irreducible over Q.
    IntPoly sd{1, 0, -10, 0, 1};
    CHECK(factor_over_Q(sd).size() == 1);
    IntPoly prod = kLehmer * IntPoly{1, -3, 1} * IntPoly{-1, 1, 1} * cyclotomic(7) * cyclotomic(7);
    auto pf = factor_over_Q(prod);
    IntPoly back = IntPoly::constant(1);
    for (auto& [q, m] : pf) back *= pow(q, m);
    CHECK(back == prod);
    CHECK(pf.size() == 4);
}

TEST_CASE("decompose and circle profile") {
    IntPoly f = pow(IntPoly{-1, 1}, 4) * cyclotomic(12);
    auto d = decompose(f);
    CHECK(d.m_plus == 4);
    CHECK(d.m_minus == 0);
    REQUIRE(d.type1.size() == 1);
    CHECK(d.type2.empty());
    auto c = circle_profile(d);
    CHECK(c.N == 4);
    CHECK(c.mF == 0);
    auto s = circle_profile(decompose(kLehmer));
    CHECK(s.N == 8);
    CHECK(s.mF == 1);
    CHECK(circle_profile(decompose(cyclotomic(12))).eF12 == 1);
    // g g* with g = X^2 + X - 1
    IntPoly g{-1, 1, 1};
    IntPoly gs{-1, -1, 1};
    auto d2 = decompose(g * gs);
    CHECK(d2.type1.empty());
    REQUIRE(d2.type2.size() == 1);
    CHECK(d2.type2[0].mult == 1);
    auto d3 = decompose(IntPoly{1, -11, 1});
    CHECK(d3.type1.size() == 1);
}

TEST_CASE("sturm") {
    CHECK(sturm_count(IntPoly{-3, 0, 1}, Rat(-2), Rat(2)) == 2);
    CHECK(sturm_count(IntPoly{-5, 0, 1}, Rat(-2), Rat(2)) == 0);
    IntPoly h = trace_polynomial(kLehmer);
    CHECK(sturm_count(h, Rat(2), Rat(cauchy_bound(h))) == 1);
    CHECK(isolate_roots(h, Rat(-2), Rat(2)).size() == 4);
}
