#include "k3/salem.hpp"

#include <algorithm>

#include "k3/cyclotomic.hpp"
#include "k3/errors.hpp"
#include "k3/parallel.hpp"

namespace k3 {

namespace {

const IntPoly kXm1{-1, 1};
const IntPoly kXp1{1, 1};

bool is_cyclotomic_factor(const IntPoly& q) {
    for (auto n : totient_fiber(static_cast<uint64_t>(q.degree())))
        if (cyclotomic(n) == q) return true;
    return false;
}

bool in_c_set(int d, uint64_t l) {
    auto c = c_sets(d).c;
    return std::find(c.begin(), c.end(), l) != c.end();
}

}  // namespace

bool is_salem_polynomial(const IntPoly& s) {
    if (!s.is_monic() || s.degree() < 4 || s.degree() % 2 || s.degree() > kMaxDegree) return false;
    if (classify_symmetry(s) != Symmetry::plus) return false;
    IntPoly h = trace_polynomial(s);
    if (h.eval(Int(2)) == 0 || h.eval(Int(-2)) == 0) return false;
    Rat b = std::max(Rat(cauchy_bound(h)), Rat(3));
    if (sturm_count(h, Rat(2), b) != 1 || sturm_count(h, Rat(-2), Rat(2)) != h.degree() - 1 ||
        sturm_count(h, -b, Rat(-2)) != 0)
        return false;
    auto fac = factor_over_Q(s);
    return fac.size() == 1 && fac[0].mult == 1;
}

const char* to_string(Criterion c) {
    switch (c) {
        case Criterion::npr_10_18: return "NPR_10_18";
        case Criterion::degree_22_square_test: return "degree_22_square_test";
        case Criterion::always_realizable_degree: return "always_realizable_degree";
        case Criterion::square_failure_shortcut: return "square_failure_shortcut";
    }
    return "?";
}

IndexMap index_at_delta(const IntPoly& f, const IntPoly& s, int pair) {
    Analysis a = analyze(f);
    IndexMap idx;
    idx.i_plus = -a.dec.m_plus;
    idx.i_minus = -a.dec.m_minus;
    int sum = idx.i_plus + idx.i_minus;
    bool placed = false;
    for (std::size_t k = 0; k < a.dec.type1.size(); ++k) {
        int m = a.dec.type1[k].mult;
        std::vector<int> v(a.circle.pairs[k], -2 * m);
        if (a.dec.type1[k].f == s) {
            if (m != 1) throw DomainError("index_at_delta: the Salem factor must be simple");
            if (pair < 0 || pair >= a.circle.pairs[k]) throw DomainError("index_at_delta: pair position out of range");
            v[pair] = 2;
            placed = true;
        }
        for (int x : v) sum += x;
        idx.per_factor.push_back(std::move(v));
    }
    if (!placed) throw DomainError("index_at_delta: S is not a type-1 factor of F");
    idx.r = (f.degree() + sum) / 2;
    idx.s = f.degree() - idx.r;
    validate_index(a, idx);
    return idx;
}

WitnessCheck check_witness(const IntPoly& f, const IntPoly& s) {
    if (f.degree() != 22) return {false, "degree is not 22"};
    IntPoly c;
    if (!divides(s, f, &c)) return {false, "S does not divide F"};
    for (auto& [q, m] : factor_over_Q(c))
        if (!is_cyclotomic_factor(q)) return {false, "complement has a non-cyclotomic factor " + to_string(q)};
    if (!check_square(f).holds) return {false, "(Square) fails"};
    IndexMap idx = index_at_delta(f, s);
    auto eq = equivalence_classes(f, idx.i_plus, idx.i_minus);
    Analysis a = analyze(f);
    int mp = a.dec.m_plus, mm = a.dec.m_minus;
    if (mp == 1 || mm == 1) {
        // The multiplicity-1 side stands alone; S joins the other linear factor.
        IntPoly lone = mp == 1 ? kXm1 : kXp1;
        IntPoly other = mp == 1 ? kXp1 : kXm1;
        if (eq.classes.size() != 2) return {false, "expected two classes"};
        auto pos = [&](const IntPoly& g) {
            return static_cast<std::size_t>(std::find(eq.elements.begin(), eq.elements.end(), g) - eq.elements.begin());
        };
        std::size_t ps = pos(s), pl = pos(lone), po = pos(other);
        if (po == eq.elements.size() || eq.class_of[ps] != eq.class_of[po] || eq.class_of[pl] == eq.class_of[ps])
            return {false, "S is not joined to the linear factor of higher multiplicity"};
        return {};
    }
    if (eq.classes.size() != 1) return {false, "equivalence relation is not weakest"};
    return {};
}

IntPoly build_witness(const IntPoly& s, uint64_t l) {
    int d = s.degree();
    if (d != 10 && d != 18) throw DomainError("build_witness: degree must be 10 or 18");
    if (!is_salem_polynomial(s)) throw DomainError("build_witness: not a Salem polynomial");
    if (!in_c_set(d, l)) throw DomainError("build_witness: l is not in C_d");
    auto sq = check_square(s);
    if (!sq.holds) throw DomainError("build_witness: S fails (Square) at " + sq.failing + "; use the square-failure construction");
    if (pi_set(s, cyclotomic(l)).primes.empty()) throw DomainError("build_witness: Pi(S, Phi_l) is empty");
    const IntPoly& phi = cyclotomic(l);
    uint64_t t = totient(l);
    IntPoly f;
    if (d == 18) {
        f = s * pow(phi, static_cast<unsigned>(4 / t));
    } else if (t == 1 || t == 2 || t == 6 || t == 12) {
        f = s * pow(phi, static_cast<unsigned>(12 / t));
    } else if (l == 5 || l == 8 || l == 10) {
        f = s * phi * pow(kXm1, 4) * pow(kXp1, 4);
    } else if (l == 12) {
        f = s * pow(phi, 3);
    } else if (l == 15 || l == 24) {
        f = s * phi * pow(cyclotomic(3), 2);
    } else if (l == 16) {
        f = s * phi * pow(kXm1, 2) * pow(kXp1, 2);
    } else if (l == 30) {
        f = s * phi * pow(cyclotomic(6), 2);
    } else if (l == 11) {
        f = s * phi * pow(kXm1, 2);
    } else if (l == 22) {
        f = s * phi * pow(kXp1, 2);
    } else {
        throw InternalError("build_witness: no table entry for l = " + std::to_string(l));
    }
    auto chk = check_witness(f, s);
    if (!chk.ok) throw InternalError("build_witness: postcondition failed for l = " + std::to_string(l) + ": " + chk.failure);
    return f;
}

IntPoly build_square_failure_witness(const IntPoly& s) {
    int d = s.degree();
    if (d > 18 || d % 2) throw DomainError("build_square_failure_witness: degree must be even and at most 18");
    if (!is_salem_polynomial(s)) throw DomainError("build_square_failure_witness: not a Salem polynomial");
    auto sq = check_square(s);
    if (sq.holds) throw DomainError("build_square_failure_witness: S satisfies (Square)");
    unsigned e = static_cast<unsigned>(21 - d);
    IntPoly f;
    if (sq.failing == "|F(1)|")
        f = pow(kXm1, e) * kXp1 * s;
    else if (sq.failing == "|F(-1)|")
        f = kXm1 * pow(kXp1, e) * s;
    else
        f = pow(kXm1, e + 1) * s;
    auto chk = check_witness(f, s);
    if (!chk.ok) throw InternalError("build_square_failure_witness: postcondition failed: " + chk.failure);
    return f;
}

SalemVerdict realizable_nonprojective(const IntPoly& s, bool with_witness) {
    if (!s.is_monic()) throw DomainError("realizable_nonprojective: polynomial must be monic");
    int d = s.degree();
    if (d % 2 || d > 22 || d < 4) throw DomainError("realizable_nonprojective: degree must be even and in [4, 22]");
    if (!is_salem_polynomial(s)) throw DomainError("realizable_nonprojective: not a Salem polynomial");
    SalemVerdict v;
    v.polynomial = s;
    v.degree = d;
    v.is_salem = true;
    auto sq = check_square(s);
    if (d == 22) {
        v.criterion = Criterion::degree_22_square_test;
        v.realizable = is_square(abs(s.eval(Int(1)))) && is_square(abs(s.eval(Int(-1))));
        if (with_witness && v.realizable) v.witness_F = s;
        return v;
    }
    if (d != 10 && d != 18) {
        v.criterion = Criterion::always_realizable_degree;
        v.realizable = true;
        if (with_witness && !sq.holds && d <= 18) v.witness_F = build_square_failure_witness(s);
        return v;
    }
    auto ls = c_sets(d).c;
    std::vector<std::vector<PiPrime>> hits(ls.size());
    parallel_for(ls.size(), [&](std::size_t i) { hits[i] = pi_set(s, cyclotomic(ls[i])).primes; });
    for (std::size_t i = 0; i < ls.size(); ++i)
        if (!hits[i].empty()) v.witnesses.push_back({ls[i], std::move(hits[i])});
    if (!sq.holds) {
        if (v.witnesses.empty()) throw InternalError("realizable_nonprojective: (Square) fails but no Pi(S, Phi_l) is nonempty");
        v.criterion = Criterion::square_failure_shortcut;
        v.realizable = true;
        if (with_witness) v.witness_F = build_square_failure_witness(s);
        return v;
    }
    v.criterion = Criterion::npr_10_18;
    v.realizable = !v.witnesses.empty();
    if (with_witness && v.realizable) v.witness_F = build_witness(s, v.witnesses.front().l);
    return v;
}

}  // namespace k3
