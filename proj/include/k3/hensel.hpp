#pragma once

#include <vector>

#include "k3/intpoly.hpp"
#include "k3/modp.hpp"

namespace k3 {

// Polynomials with coefficients reduced into [0, m).
IntPoly mod_reduce(const IntPoly& f, const Int& m);
// Symmetric representative in (-m/2, m/2].
IntPoly mod_symmetric(const IntPoly& f, const Int& m);
IntPoly mul_mod(const IntPoly& a, const IntPoly& b, const Int& m);
// Division by a monic b over Z/m.
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& b, const Int& m);

// Lift monic pairwise coprime factors of (f mod p), whose product is f mod p,
// to monic factors mod p^k whose product is f mod p^k. f must be monic.
std::vector<IntPoly> hensel_lift(const IntPoly& f, const std::vector<ModPoly>& factors, int k);

}  // namespace k3
