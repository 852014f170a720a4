#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "k3/intpoly.hpp"
#include "k3/symbols.hpp"

namespace k3 {

struct SquareCheck {
    bool holds = true;
    std::string failing;  // "|F(1)|", "|F(-1)|" or "(-1)^(deg/2) F(1) F(-1)"
    Int value;
};

// |F(1)|, |F(-1)| and (-1)^{deg/2} F(1) F(-1) are all squares (0 counts).
SquareCheck check_square(const IntPoly& f);

// Decomposition and circle data of a *-symmetric F, computed once.
struct Analysis {
    SymmetricDecomposition dec;
    CircleProfile circle;
};
Analysis analyze(const IntPoly& f);

// r, s >= m(F), and r = s = m(F) mod 2 when F(1) F(-1) != 0.
bool check_sign(const IntPoly& f, int r, int s);

// Values on X - 1, X + 1 and on the circle pairs of each type-1 factor
// (ascending trace, aligned with decompose(F).type1).
struct IndexMap {
    int i_plus = 0;
    int i_minus = 0;
    std::vector<std::vector<int>> per_factor;
    int r = 0;
    int s = 0;
    friend bool operator==(const IndexMap&, const IndexMap&) = default;
};

// Throws DomainError naming the violated constraint.
void validate_index(const Analysis& a, const IndexMap& idx);
void validate_index(const IntPoly& f, const IndexMap& idx);

// All index maps at signature (r, s), lexicographic in (i_plus, i_minus, pair values); at most limit.
std::vector<IndexMap> enumerate_index_maps(const IntPoly& f, int r, int s,
                                           std::size_t limit = std::numeric_limits<std::size_t>::max());

struct DeltaPair {
    Rat delta_plus;
    Rat delta_minus;
};
DeltaPair delta(const IntPoly& f, int i_plus, int i_minus);

enum class Side { plus, minus };
// {X -+ 1 mod p} or the empty set, by multiplicity and the class of delta at p.
LocalSymbolSet primed_symbol_set(const IntPoly& f, int i_plus, int i_minus, Side side, uint64_t p);

struct ClassEdge {
    std::size_t a, b;  // indices into elements
    uint64_t p;
    ModPoly common;
};

// Partition of I(F;Q): X - 1, X + 1 (when present), then the type-1 factors in canonical order.
struct EquivalenceClasses {
    std::vector<IntPoly> elements;
    std::vector<int> mult;
    std::vector<std::vector<std::size_t>> classes;  // sorted by least member
    std::vector<ClassEdge> edges;                   // every related pair, smallest prime
    std::vector<std::size_t> class_of;
};
EquivalenceClasses equivalence_classes(const IntPoly& f, int i_plus, int i_minus);

// Bit per element of I(F;Q), in the order of EquivalenceClasses::elements.
std::vector<int> eta_infinity(const IntPoly& f, const IndexMap& idx);

struct VanishingIndex {
    IndexMap map;
    bool vanishing_guaranteed = true;
    std::string route;  // which branch of the construction produced it
};

// An index map j at (n, n) with j(X -+ 1) = i_+- mod 4 whose obstruction map vanishes.
// Requires (Square), m_+- != 1 and the prolongation conditions on (i_plus, i_minus).
// seed 0 gives the canonical greedy assignment; other seeds pick other admissible ones.
VanishingIndex construct_vanishing_index(const IntPoly& f, int i_plus, int i_minus, uint64_t seed = 0);

struct ObstructionReport {
    EquivalenceClasses eq;
    std::vector<std::vector<int>> omega_basis;  // class indicators over elements
    std::vector<int> values;                    // bit per basis element
    bool vanishes = true;
    int reduced_rank = 0;
    IndexMap reference;  // the vanishing index compared against
};

ObstructionReport obstruction_map(const IntPoly& f, const IndexMap& idx, uint64_t seed = 0);

}  // namespace k3
