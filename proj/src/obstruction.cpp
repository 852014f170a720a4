#include "k3/obstruction.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>

#include "k3/errors.hpp"
#include "k3/padic.hpp"
#include "k3/parallel.hpp"

namespace k3 {

namespace {

const IntPoly kXm1{-1, 1};
const IntPoly kXp1{1, 1};

int mod4(int v) { return ((v % 4) + 4) % 4; }

bool eta_bit(int twice) { return mod4(twice / 2) >= 2; }

void require_parity(const Analysis& a, int i_plus, int i_minus, const char* who) {
    if (mod4(i_plus - a.dec.m_plus) % 2 || mod4(i_minus - a.dec.m_minus) % 2)
        throw DomainError(std::string(who) + ": i_+- must have the parity of m_+-");
}

void require_square(const IntPoly& f, const char* who) {
    auto sq = check_square(f);
    if (!sq.holds) throw DomainError(std::string(who) + ": (Square) fails at " + sq.failing);
}

Rat delta_side(const Analysis& a, int m, int i, const Int& f12_at) {
    Rat d(abs(f12_at));
    if (a.dec.m_plus % 2) d *= 2;  // keyed on m_+; m_- has the same parity
    if (mod4(m - i) == 2) d = -d;
    return d;
}

LocalSymbolSet primed(int m, const Rat& d, const IntPoly& lin, uint64_t p) {
    LocalSymbolSet out;
    out.p = p;
    if (m >= 3 || (m == 2 && !class_eq(d, Rat(-1), p))) out.insert(reduce_mod_p(lin, p));
    return out;
}

// Canonical or seeded raise of circle-pair values from their minima to reach target.
void assign_pairs(const Analysis& a, const std::vector<std::size_t>& factors, int target,
                  std::mt19937_64* rng, IndexMap& out) {
    struct Slot {
        std::size_t k, j;
        int room;
    };
    std::vector<Slot> slots;
    int sum = 0;
    for (auto k : factors) {
        int m = a.dec.type1[k].mult;
        for (int j = 0; j < a.circle.pairs[k]; ++j) {
            out.per_factor[k][j] = -2 * m;
            sum -= 2 * m;
            slots.push_back({k, static_cast<std::size_t>(j), m});
        }
    }
    int need = target - sum;
    int cap = 0;
    for (auto& s : slots) cap += s.room;
    if (need < 0 || need % 4 || need / 4 > cap)
        throw InternalError("construct_vanishing_index: class signature cannot be balanced");
    int steps = need / 4;
    if (!rng) {
        for (auto& s : slots) {
            int t = std::min(steps, s.room);
            out.per_factor[s.k][s.j] += 4 * t;
            steps -= t;
        }
        return;
    }
    while (steps > 0) {
        std::vector<std::size_t> open;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (slots[i].room > 0) open.push_back(i);
        auto& s = slots[open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(*rng)]];
        out.per_factor[s.k][s.j] += 4;
        --s.room;
        --steps;
    }
}

int e_of(const Analysis& a, const std::vector<std::size_t>& factors) {
    int e = 1;
    for (auto k : factors)
        if (a.dec.type1[k].mult % 2) e *= e_sign(a.dec.type1[k].f);
    return e;
}

}  // namespace

SquareCheck check_square(const IntPoly& f) {
    if (f.degree() % 2 != 0) throw DomainError("check_square: degree must be even");
    Int a = f.eval(Int(1)), b = f.eval(Int(-1));
    Int prod = a * b;
    if ((f.degree() / 2) % 2 == 1) prod = -prod;
    SquareCheck r;
    if (!is_square(abs(a))) return {false, "|F(1)|", abs(a)};
    if (!is_square(abs(b))) return {false, "|F(-1)|", abs(b)};
    if (!is_square(prod)) return {false, "(-1)^(deg/2) F(1) F(-1)", prod};
    return r;
}

Analysis analyze(const IntPoly& f) {
    Analysis a;
    a.dec = decompose(f);
    a.circle = circle_profile(a.dec);
    return a;
}

bool check_sign(const IntPoly& f, int r, int s) {
    if (r < 0 || s < 0 || r + s != f.degree()) throw DomainError("check_sign: requires r, s >= 0 and r + s = deg F");
    Analysis a = analyze(f);
    int m = a.circle.mF;
    if (r < m || s < m) return false;
    if (a.dec.m_plus == 0 && a.dec.m_minus == 0) return (r - m) % 2 == 0 && (s - m) % 2 == 0;
    return true;
}

void validate_index(const Analysis& a, const IndexMap& idx) {
    const auto& d = a.dec;
    if (idx.r < 0 || idx.s < 0 || idx.r + idx.s != d.input.degree())
        throw DomainError("index map: signature must satisfy r, s >= 0 and r + s = deg F");
    if (std::abs(idx.i_plus) > d.m_plus || mod4(idx.i_plus - d.m_plus) % 2)
        throw DomainError("index map: i_plus must satisfy |i_plus| <= m_+ and i_plus = m_+ mod 2");
    if (std::abs(idx.i_minus) > d.m_minus || mod4(idx.i_minus - d.m_minus) % 2)
        throw DomainError("index map: i_minus must satisfy |i_minus| <= m_- and i_minus = m_- mod 2");
    if (idx.per_factor.size() != d.type1.size()) throw DomainError("index map: one value list per type-1 factor expected");
    int sum = idx.i_plus + idx.i_minus;
    for (std::size_t k = 0; k < d.type1.size(); ++k) {
        if (static_cast<int>(idx.per_factor[k].size()) != a.circle.pairs[k])
            throw DomainError("index map: wrong number of circle-pair values for " + to_string(d.type1[k].f));
        int m = d.type1[k].mult;
        for (int v : idx.per_factor[k]) {
            if (std::abs(v) > 2 * m || mod4(v - 2 * m) != 0)
                throw DomainError("index map: pair value " + std::to_string(v) + " violates |v| <= 2m_f, v = 2m_f mod 4");
            sum += v;
        }
    }
    if (sum != idx.r - idx.s) throw DomainError("index map: values do not sum to r - s");
}

void validate_index(const IntPoly& f, const IndexMap& idx) { validate_index(analyze(f), idx); }

std::vector<IndexMap> enumerate_index_maps(const IntPoly& f, int r, int s, std::size_t limit) {
    if (r < 0 || s < 0 || r + s != f.degree())
        throw DomainError("enumerate_index_maps: requires r, s >= 0 and r + s = deg F");
    Analysis a = analyze(f);
    struct Slot {
        std::size_t k;
        int m;
    };
    std::vector<Slot> slots;
    for (std::size_t k = 0; k < a.dec.type1.size(); ++k)
        for (int j = 0; j < a.circle.pairs[k]; ++j) slots.push_back({k, a.dec.type1[k].mult});
    std::vector<int> tail(slots.size() + 1, 0);  // max |sum| of slots from i on
    for (std::size_t i = slots.size(); i-- > 0;) tail[i] = tail[i + 1] + 2 * slots[i].m;

    std::vector<IndexMap> out;
    IndexMap cur;
    cur.r = r;
    cur.s = s;
    cur.per_factor.resize(a.dec.type1.size());
    std::vector<int> vals(slots.size());
    auto emit = [&] {
        for (auto& v : cur.per_factor) v.clear();
        for (std::size_t i = 0; i < slots.size(); ++i) cur.per_factor[slots[i].k].push_back(vals[i]);
        out.push_back(cur);
    };
    auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
        if (out.size() >= limit) return;
        if (std::abs(remaining) > tail[i]) return;
        if (i == slots.size()) {
            if (remaining == 0) emit();
            return;
        }
        for (int v = -2 * slots[i].m; v <= 2 * slots[i].m; v += 4) {
            vals[i] = v;
            self(self, i + 1, remaining - v);
        }
    };
    for (int ip = -a.dec.m_plus; ip <= a.dec.m_plus; ip += 2)
        for (int im = -a.dec.m_minus; im <= a.dec.m_minus; im += 2) {
            cur.i_plus = ip;
            cur.i_minus = im;
            rec(rec, 0, r - s - ip - im);
        }
    return out;
}

DeltaPair delta(const IntPoly& f, int i_plus, int i_minus) {
    Analysis a = analyze(f);
    require_parity(a, i_plus, i_minus, "delta");
    return {delta_side(a, a.dec.m_plus, i_plus, a.dec.f12.eval(Int(1))),
            delta_side(a, a.dec.m_minus, i_minus, a.dec.f12.eval(Int(-1)))};
}

LocalSymbolSet primed_symbol_set(const IntPoly& f, int i_plus, int i_minus, Side side, uint64_t p) {
    if (!is_prime_u64(p)) throw DomainError("primed_symbol_set: p is not prime");
    Analysis a = analyze(f);
    require_parity(a, i_plus, i_minus, "primed_symbol_set");
    bool plus = side == Side::plus;
    int m = plus ? a.dec.m_plus : a.dec.m_minus;
    if (m == 0) throw DomainError(std::string("primed_symbol_set: ") + (plus ? "X - 1" : "X + 1") + " does not divide F");
    Rat d = plus ? delta_side(a, m, i_plus, a.dec.f12.eval(Int(1))) : delta_side(a, m, i_minus, a.dec.f12.eval(Int(-1)));
    return primed(m, d, plus ? kXm1 : kXp1, p);
}

namespace {

EquivalenceClasses classes_of(const Analysis& a, int i_plus, int i_minus) {
    const auto& d = a.dec;
    EquivalenceClasses eq;
    if (d.m_plus) {
        eq.elements.push_back(kXm1);
        eq.mult.push_back(d.m_plus);
    }
    if (d.m_minus) {
        eq.elements.push_back(kXp1);
        eq.mult.push_back(d.m_minus);
    }
    for (auto& [g, m] : d.type1) {
        eq.elements.push_back(g);
        eq.mult.push_back(m);
    }
    Rat dp = delta_side(a, d.m_plus, i_plus, d.f12.eval(Int(1)));
    Rat dm = delta_side(a, d.m_minus, i_minus, d.f12.eval(Int(-1)));

    std::size_t n = eq.elements.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::vector<std::optional<ClassEdge>> found(pairs.size());

    parallel_for(pairs.size(), [&](std::size_t t) {
        auto [i, j] = pairs[t];
        const IntPoly& f = eq.elements[i];
        const IntPoly& g = eq.elements[j];
        uint64_t p = 0;
        try {
            if (f == kXm1 && g == kXp1) {
                p = 2;
                auto s = intersect(primed(d.m_plus, dp, kXm1, 2), primed(d.m_minus, dm, kXp1, 2));
                if (!s.empty()) found[t] = ClassEdge{i, j, 2, s.members[0]};
            } else if (f == kXm1 || f == kXp1) {
                bool plus = f == kXm1;
                Int v = g.eval(Int(plus ? 1 : -1));
                for (uint64_t q : prime_divisors(v)) {
                    p = q;
                    auto s = intersect(plus ? primed(d.m_plus, dp, kXm1, q) : primed(d.m_minus, dm, kXp1, q),
                                       symbol_set(g, q));
                    if (!s.empty()) {
                        found[t] = ClassEdge{i, j, q, s.members[0]};
                        break;
                    }
                }
            } else {
                PiResult pr = pi_set(f, g);
                if (!pr.primes.empty()) found[t] = ClassEdge{i, j, pr.primes[0].p, pr.primes[0].common[0]};
            }
        } catch (const Undecided& e) {
            throw Undecided("equivalence_classes: undecided for (" + to_string(f) + ", " + to_string(g) + "): " + e.what(),
                            e.prime ? e.prime : p);
        }
    });

    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto& e : found) {
        if (!e) continue;
        eq.edges.push_back(*e);
        std::size_t ra = find(e->a), rb = find(e->b);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
    eq.class_of.assign(n, 0);
    std::vector<std::size_t> slot(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = find(i);
        if (slot[r] == n) {
            slot[r] = eq.classes.size();
            eq.classes.emplace_back();
        }
        eq.classes[slot[r]].push_back(i);
        eq.class_of[i] = slot[r];
    }
    return eq;
}

std::vector<int> eta_of(const Analysis& a, const IndexMap& idx) {
    std::vector<int> bits;
    if (a.dec.m_plus) bits.push_back(eta_bit(a.dec.m_plus - idx.i_plus));
    if (a.dec.m_minus) bits.push_back(eta_bit(a.dec.m_minus - idx.i_minus));
    for (std::size_t k = 0; k < a.dec.type1.size(); ++k) {
        int tw = a.dec.type1[k].mult * a.dec.type1[k].f.degree();
        for (int v : idx.per_factor[k]) tw -= v;
        bits.push_back(eta_bit(tw));
    }
    return bits;
}

}  // namespace

EquivalenceClasses equivalence_classes(const IntPoly& f, int i_plus, int i_minus) {
    Analysis a = analyze(f);
    require_square(f, "equivalence_classes");
    require_parity(a, i_plus, i_minus, "equivalence_classes");
    return classes_of(a, i_plus, i_minus);
}

std::vector<int> eta_infinity(const IntPoly& f, const IndexMap& idx) {
    Analysis a = analyze(f);
    validate_index(a, idx);
    return eta_of(a, idx);
}

VanishingIndex construct_vanishing_index(const IntPoly& f, int i_plus, int i_minus, uint64_t seed) {
    Analysis a = analyze(f);
    require_square(f, "construct_vanishing_index");
    const auto& d = a.dec;
    if (d.m_plus == 1 || d.m_minus == 1)
        throw Unsupported("construct_vanishing_index: X - 1 or X + 1 has multiplicity 1");
    if (std::abs(i_plus) > d.m_plus || std::abs(i_minus) > d.m_minus)
        throw DomainError("construct_vanishing_index: requires |i_+-| <= m_+-");
    require_parity(a, i_plus, i_minus, "construct_vanishing_index");
    if (mod4(i_plus + i_minus - (1 - a.circle.eF12)) != 0)
        throw DomainError("construct_vanishing_index: requires i_+ + i_- = 1 - e(F12) mod 4");

    // With both sides of even multiplicity >= 2, the extra (X -+ 1)^2 blocks carry
    // constant isometries of index 0 and the classes are taken on the m = 2 remainder.
    bool peel = d.m_plus >= 2 && d.m_minus >= 2 && d.m_plus % 2 == 0 && (d.m_plus > 2 || d.m_minus > 2);
    IntPoly g = f;
    Analysis ga = a;
    if (peel) {
        g = pow(kXm1, 2) * pow(kXp1, 2) * d.f12;
        ga = analyze(g);
    }
    EquivalenceClasses eq = classes_of(ga, i_plus, i_minus);

    std::optional<std::mt19937_64> rng;
    if (seed) rng.emplace(seed);
    VanishingIndex out;
    IndexMap& j = out.map;
    j.r = j.s = f.degree() / 2;
    j.per_factor.resize(d.type1.size());
    for (std::size_t k = 0; k < d.type1.size(); ++k) j.per_factor[k].assign(a.circle.pairs[k], 0);

    std::size_t off = (d.m_plus ? 1 : 0) + (d.m_minus ? 1 : 0);
    std::optional<std::size_t> jp, jm;
    if (d.m_plus) jp = eq.class_of[0];
    if (d.m_minus) jm = eq.class_of[d.m_plus ? 1 : 0];
    auto type1_members = [&](std::size_t c) {
        std::vector<std::size_t> ks;
        for (auto e : eq.classes[c])
            if (e >= off) ks.push_back(e - off);
        return ks;
    };
    int ip = mod4(i_plus + 1) - 1;   // in {-1, 0, 1, 2}
    int im = mod4(i_minus + 2) - 2;  // in {-2, -1, 0, 1}
    j.i_plus = ip;
    j.i_minus = im;

    for (std::size_t c = 0; c < eq.classes.size(); ++c) {
        if (c == jp || c == jm) continue;
        assign_pairs(a, type1_members(c), 0, rng ? &*rng : nullptr, j);
    }
    if (!jp || !jm || *jp == *jm) {
        std::vector<std::size_t> ks;
        if (jp) ks = type1_members(*jp);
        if (jm && jm != jp) ks = type1_members(*jm);
        assign_pairs(a, ks, -(ip + im), rng ? &*rng : nullptr, j);
        out.route = (jp && jm) ? "X - 1 and X + 1 in one class" : "at most one of X -+ 1 present";
    } else {
        // Separate classes J+ and J-; only m_+ = m_- = 2 reaches here.
        auto kp = type1_members(*jp), km = type1_members(*jm);
        if (mod4(ip - (1 - e_of(a, kp))) != 0 || mod4(im - (1 - e_of(a, km))) != 0)
            throw InternalError("construct_vanishing_index: reached a case excluded by the J+/J- analysis");
        assign_pairs(a, kp, -ip, rng ? &*rng : nullptr, j);
        assign_pairs(a, km, -im, rng ? &*rng : nullptr, j);
        out.route = "X - 1 and X + 1 in separate classes";
    }
    if (peel) out.route += ", (X -+ 1)^2 remainder";
    validate_index(a, j);
    return out;
}

ObstructionReport obstruction_map(const IntPoly& f, const IndexMap& idx, uint64_t seed) {
    Analysis a = analyze(f);
    require_square(f, "obstruction_map");
    validate_index(a, idx);
    if ((idx.r - idx.s) % 8 != 0)
        throw DomainError("obstruction_map: requires r = s mod 8");
    if (a.dec.m_plus == 1 || a.dec.m_minus == 1)
        throw Unsupported("obstruction_map: X - 1 or X + 1 has multiplicity 1");
    ObstructionReport rep;
    rep.eq = classes_of(a, idx.i_plus, idx.i_minus);
    rep.reference = construct_vanishing_index(f, idx.i_plus, idx.i_minus, seed).map;
    auto ei = eta_of(a, idx), ej = eta_of(a, rep.reference);
    std::size_t n = rep.eq.elements.size();
    int total = 0;
    for (auto& c : rep.eq.classes) {
        std::vector<int> ind(n, 0);
        int v = 0;
        for (auto e : c) {
            ind[e] = 1;
            v ^= ei[e] ^ ej[e];
        }
        rep.omega_basis.push_back(std::move(ind));
        rep.values.push_back(v);
        total += v;
        if (v) rep.vanishes = false;
    }
    if (total % 2) throw InternalError("obstruction_map: values do not sum to zero over the classes");
    rep.reduced_rank = static_cast<int>(rep.eq.classes.size()) - 1;
    return rep;
}

}  // namespace k3
