#pragma once

#include <cstdint>
#include <vector>

#include "k3/modp.hpp"

namespace k3 {

// A set of irreducible polynomials over F_p, kept sorted and deduplicated.
struct LocalSymbolSet {
    uint64_t p = 2;
    std::vector<ModPoly> members;

    void insert(const ModPoly& f);
    bool contains(const ModPoly& f) const;
    bool empty() const { return members.empty(); }
    friend bool operator==(const LocalSymbolSet& a, const LocalSymbolSet& b) {
        return a.p == b.p && a.members == b.members;
    }
};

LocalSymbolSet intersect(const LocalSymbolSet& a, const LocalSymbolSet& b);

}  // namespace k3
