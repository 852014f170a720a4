#include "doctest.h"

#include "k3/cyclotomic.hpp"
#include "k3/errors.hpp"
#include "k3/modp.hpp"

using namespace k3;

namespace {
ModPoly mp(uint64_t p, std::vector<uint64_t> c) { return ModPoly(p, std::move(c)); }

// Exhaustive irreducibility for small degree: no factor of degree <= deg/2.
bool brute_irreducible(const ModPoly& f) {
    uint64_t p = f.p();
    int n = f.degree();
    for (int d = 1; 2 * d <= n; ++d) {
        std::vector<uint64_t> c(d + 1, 0);
        c[d] = 1;
        while (true) {
            if ((f % ModPoly(p, c)).is_zero()) return false;
            int i = 0;
            while (i < d && ++c[i] == p) c[i++] = 0;
            if (i == d) break;
        }
    }
    return true;
}
}  // namespace

TEST_CASE("reduce mod p") {
    CHECK(reduce_mod_p(IntPoly{1, -11, 1}, 3) == mp(3, {1, 1, 1}));
    CHECK(reduce_mod_p(IntPoly{1, -11, 1}, 3) == pow(mp(3, {2, 1}), 2));
    CHECK(reduce_mod_p(IntPoly{-1, 1}, 2) == mp(2, {1, 1}));
    CHECK(reduce_mod_p(cyclotomic(9), 3) == pow(mp(3, {2, 1}), 6));
    CHECK_THROWS_AS(reduce_mod_p(IntPoly{1, 1}, 4), DomainError);
    CHECK(to_string(mp(3, {1, 0, 1})) == "X^2 + 1 mod 3");
}

TEST_CASE("factor mod p") {
    auto f = factor_mod_p(reduce_mod_p(cyclotomic(12), 3));
    REQUIRE(f.size() == 1);
    CHECK(f[0].f == mp(3, {1, 0, 1}));
    CHECK(f[0].mult == 2);
    auto g = factor_mod_p(pow(mp(3, {2, 1}), 2));
    REQUIRE(g.size() == 1);
    CHECK(g[0].f == mp(3, {2, 1}));
    auto h = factor_mod_p(reduce_mod_p(cyclotomic(5), 2));
    REQUIRE(h.size() == 1);
    CHECK(h[0].f.degree() == 4);
    CHECK(brute_irreducible(h[0].f));
}

TEST_CASE("factor mod p reconstructs and factors are irreducible") {
    for (uint64_t p : {2, 3, 5, 7, 11, 13}) {
        for (uint64_t n = 1; n <= 60; ++n) {
            ModPoly f = reduce_mod_p(cyclotomic(n) * cyclotomic(n % 7 + 1) * IntPoly{3, 1, 0, 1}, p);
            auto fac = factor_mod_p(f);
            ModPoly back = ModPoly::constant(p, 1);
            for (auto& [q, m] : fac) {
                back *= pow(q, m);
                if (q.degree() <= 3) CHECK(brute_irreducible(q));
                CHECK(is_irreducible_mod_p(q));
            }
            CHECK(back == f);
        }
    }
}

TEST_CASE("seeded splitting is reproducible") {
    ModPoly f = reduce_mod_p(cyclotomic(105), 2);
    auto a = factor_mod_p(f, 1), b = factor_mod_p(f, 99);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].f == b[i].f);
}

TEST_CASE("star symmetry mod p") {
    CHECK(is_star_symmetric_mod_p(mp(2, {1, 1})));
    CHECK(is_star_symmetric_mod_p(mp(3, {1, 0, 1})));
    CHECK_FALSE(is_star_symmetric_mod_p(mp(5, {2, 1, 1})));
    CHECK_THROWS_AS(is_star_symmetric_mod_p(mp(5, {0, 1})), DomainError);
    CHECK(mp(2, {1, 1}) == reduce_mod_p(IntPoly{-1, 1}, 2));
    // star permutes the factors of a symmetric reduction, fixing the symmetric ones
    for (uint64_t p : {2, 3, 5, 7, 11}) {
        for (uint64_t n = 3; n <= 40; ++n) {
            if (n % p == 0) continue;
            auto fac = factor_mod_p(reduce_mod_p(cyclotomic(n), p));
            for (auto& [q, m] : fac) {
                ModPoly s = star_mod_p(q);
                bool found = false;
                for (auto& [r, k] : fac) found = found || r == s;
                CHECK(found);
            }
        }
    }
}
