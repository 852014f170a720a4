#pragma once

#include <cstdint>
#include <vector>

#include "k3/bigint.hpp"

namespace k3 {

using FpVec = std::vector<uint64_t>;
using FpMat = std::vector<FpVec>;  // row-major

// Reduced row echelon basis of the span of `rows` over F_p.
struct Echelon {
    FpMat rows;
    std::vector<int> pivots;
};
Echelon echelon_mod_p(FpMat rows, uint64_t p);
// Basis of {x : A x = 0}; `cols` is the number of unknowns.
FpMat nullspace_mod_p(const FpMat& A, size_t cols, uint64_t p);
size_t rank_mod_p(const FpMat& rows, uint64_t p);

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;  // row-major

// Coefficients (ascending, monic) of det(yI - A) over Z/m, division-free.
IntVec charpoly_mod(const IntMat& A, const Int& m);

// Upper triangular basis (as columns) of the lattice spanned by `gens` and D Z^n,
// diagonal entries positive, entries above the diagonal reduced modulo the diagonal.
IntMat hnf_mod(const std::vector<IntVec>& gens, size_t n, const Int& D);

}  // namespace k3
