#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "k3/intpoly.hpp"
#include "k3/obstruction.hpp"
#include "k3/padic.hpp"

namespace k3 {

// Irreducible, +1-symmetric, even degree >= 4, with exactly one trace root beyond 2
// and all other trace roots in (-2, 2).
bool is_salem_polynomial(const IntPoly& s);

enum class Criterion { npr_10_18, degree_22_square_test, always_realizable_degree, square_failure_shortcut };
const char* to_string(Criterion c);

struct SalemWitness {
    uint64_t l;
    std::vector<PiPrime> primes;
};

struct SalemVerdict {
    IntPoly polynomial;
    int degree = 0;
    bool is_salem = false;
    bool realizable = false;
    Criterion criterion = Criterion::npr_10_18;
    std::vector<SalemWitness> witnesses;  // l in C_d with Pi(S, Phi_l) nonempty
    std::optional<IntPoly> witness_F;
};

// Nonprojective realizability for a Salem polynomial of degree 4..22.
SalemVerdict realizable_nonprojective(const IntPoly& s, bool with_witness = false);

// Degree-22 complemented Salem polynomial from the d = 10, 18 case tables.
IntPoly build_witness(const IntPoly& s, uint64_t l);
// Degree-22 polynomial used when S fails (Square), d <= 18.
IntPoly build_square_failure_witness(const IntPoly& s);

// The index map with one circle pair of S at +2 (chosen by position in ascending
// trace order) and every other real factor at its minimum.
IndexMap index_at_delta(const IntPoly& f, const IntPoly& s, int pair = 0);

struct WitnessCheck {
    bool ok = true;
    std::string failure;
};
// Degree 22, F = S C with C cyclotomic, (Square), and the expected class shape under index_at_delta.
WitnessCheck check_witness(const IntPoly& f, const IntPoly& s);

}  // namespace k3
