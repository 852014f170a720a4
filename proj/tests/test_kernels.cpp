#include <random>

#include "doctest.h"

#include "k3/cyclotomic.hpp"
#include "k3/errors.hpp"
#include "k3/kernels.hpp"

using namespace k3;

namespace {

IntPoly random_poly(std::mt19937_64& rng, int deg) {
    std::uniform_int_distribution<int> c(-9, 9);
    std::vector<Int> v;
    for (int i = 0; i < deg; ++i) v.emplace_back(c(rng));
    v.emplace_back(c(rng) == 0 ? 1 : c(rng) | 1);
    return IntPoly(v);
}

}  // namespace

TEST_CASE("Bareiss determinant") {
    using M = std::vector<std::vector<Int>>;
    CHECK(bareiss_det_serial(M{{Int(2), Int(1)}, {Int(7), Int(4)}}) == 1);
    // zero leading pivot forces a row swap
    M perm{{Int(0), Int(1), Int(0)}, {Int(1), Int(0), Int(0)}, {Int(0), Int(0), Int(1)}};
    CHECK(bareiss_det_serial(perm) == -1);
    CHECK(bareiss_det_omp(perm) == -1);
    M singular{{Int(1), Int(2), Int(3)}, {Int(2), Int(4), Int(6)}, {Int(1), Int(0), Int(1)}};
    CHECK(bareiss_det_serial(singular) == 0);
    CHECK_THROWS_AS(bareiss_det_serial(M{{Int(1), Int(2)}}), DomainError);
    CHECK(bareiss_det_serial(M{}) == 1);
}

TEST_CASE("Sylvester determinant against the subresultant resultant") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        IntPoly f = random_poly(rng, 1 + t % 9), g = random_poly(rng, 1 + (t / 9) % 13);
        Int r = resultant(f, g);
        CHECK(sylvester_resultant_serial(f, g) == r);
        CHECK(sylvester_resultant_omp(f, g) == r);
    }
    IntPoly common = IntPoly{1, 1} * IntPoly{2, 0, 1};
    CHECK(sylvester_resultant_serial(common, IntPoly{1, 1} * IntPoly{-3, 1}) == 0);
    CHECK(sylvester_resultant_omp(cyclotomic(12), IntPoly{-1, 1}) == 1);
}

TEST_CASE("sweeps agree serial and parallel") {
    auto a = apostol_sweep_serial(30), b = apostol_sweep_omp(30);
    REQUIRE(a.size() == 435);
    REQUIRE(b.size() == a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].n == b[i].n);
        CHECK(a[i].n2 == b[i].n2);
        CHECK(a[i].determinant == b[i].determinant);
        CHECK(a[i].closed_form == a[i].determinant);
    }
    auto ls = c_sets(18).c;
    auto p = pi_sweep_serial(ls), q = pi_sweep_omp(ls);
    REQUIRE(p.size() == 15);
    for (std::size_t i = 0; i < p.size(); ++i) {
        CHECK(p[i].engine == q[i].engine);
        CHECK(p[i].closed_form == p[i].engine);
    }
}
