#include "k3/symbols.hpp"

#include <algorithm>

#include "k3/errors.hpp"

namespace k3 {

void LocalSymbolSet::insert(const ModPoly& f) {
    if (f.p() != p) throw InternalError("LocalSymbolSet: member over the wrong field");
    auto it = std::lower_bound(members.begin(), members.end(), f);
    if (it == members.end() || *it != f) members.insert(it, f);
}

bool LocalSymbolSet::contains(const ModPoly& f) const {
    return std::binary_search(members.begin(), members.end(), f);
}

LocalSymbolSet intersect(const LocalSymbolSet& a, const LocalSymbolSet& b) {
    if (a.p != b.p) throw InternalError("intersect: symbol sets over different fields");
    LocalSymbolSet r;
    r.p = a.p;
    std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                          std::back_inserter(r.members));
    return r;
}

}  // namespace k3
