#pragma once

#include <cstdint>
#include <vector>

#include "k3/intpoly.hpp"
#include "k3/modp.hpp"

namespace k3::detail {

// One irreducible factor of q over Q_p, known modulo p^K.
struct LocalBlock {
    int e = 1;            // ramification index
    int f = 1;            // residue degree
    IntPoly approx;       // monic, coefficients in [0, p^K)
    ModPoly residue;      // irreducible, approx = residue^exponent mod p
    int exponent = 1;
};

// Splits a monic irreducible q over Q_p using a p-maximal order of Q[x]/(q).
std::vector<LocalBlock> split_locally(const IntPoly& q, uint64_t p, int K, uint64_t seed);

}  // namespace k3::detail
