#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "k3/intpoly.hpp"
#include "k3/modp.hpp"
#include "k3/symbols.hpp"

namespace k3 {

// The real place in square-class computations.
constexpr uint64_t kInfinity = 0;

struct SquareClass {
    uint64_t p = kInfinity;
    int parity = 0;  // valuation mod 2 (0 at infinity)
    int unit = 1;    // odd p: Legendre symbol; p = 2: unit part mod 8; infinity: sign
    friend bool operator==(const SquareClass&, const SquareClass&) = default;
};

SquareClass square_class(const Rat& x, uint64_t p);
bool class_eq(const Rat& x, const Rat& y, uint64_t p);

constexpr int kMaxPrecision = 512;
constexpr int kMaxLocalDegree = kMaxDegree;

struct LocalFactor {
    uint64_t p = 2;
    ModPoly reduction;       // approx mod p
    ModPoly residue;         // irreducible; reduction = residue^reduction_exponent
    int reduction_exponent = 1;
    int residue_degree = 1;
    int ramification_index = 1;
    bool star_symmetric = false;
    IntPoly approx;          // monic, congruent to the factor mod p^precision
    int precision = 1;
    IntPoly rational_factor; // the irreducible factor of the input over Q it divides
};

// Irreducible factors over Q_p of a monic squarefree f, grouped by rational factor.
std::vector<LocalFactor> factor_over_Qp(const IntPoly& f, uint64_t p, uint64_t seed = kDefaultSeed);

// Reductions of the *-symmetric irreducible factors of f over Z_p.
LocalSymbolSet symbol_set(const IntPoly& f, uint64_t p);

struct PiPrime {
    uint64_t p;
    std::vector<ModPoly> common;  // the intersection of the two symbol sets
};

struct PiResult {
    Int res;
    std::vector<PiPrime> primes;          // ascending
    std::optional<IntPoly> shared_factor; // set when Res = 0; every prime is then a candidate
};

PiResult pi_set(const IntPoly& f, const IntPoly& g);

// Certified members among X - 1, X + 1 from valuations and the 2-adic class of the discriminant-like product.
LocalSymbolSet nonsquare_memberships(const IntPoly& f, uint64_t p);

}  // namespace k3
