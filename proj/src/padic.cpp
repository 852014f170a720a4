#include "k3/padic.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "k3/deadline.hpp"
#include "k3/errors.hpp"
#include "k3/hensel.hpp"
#include "k3/parallel.hpp"
#include "order.hpp"

namespace k3 {

namespace {

int legendre(const Int& u, uint64_t p) {
    Int r;
    mpz_fdiv_r_ui(r.get_mpz_t(), u.get_mpz_t(), p);
    return powmod(to_u64(r), (p - 1) / 2, p) == 1 ? 1 : -1;
}

void require_prime(uint64_t p, const char* who) {
    if (!is_prime_u64(p)) throw DomainError(std::string(who) + ": " + std::to_string(p) + " is not prime");
}

// Star of a monic polynomial over Z/m with unit constant term, or nullopt.
std::optional<IntPoly> star_mod(const IntPoly& g, const Int& m) {
    Int c0 = g.coeffs()[0], inv;
    if (mpz_invert(inv.get_mpz_t(), c0.get_mpz_t(), m.get_mpz_t()) == 0) return std::nullopt;
    std::vector<Int> r(g.coeffs().rbegin(), g.coeffs().rend());
    for (auto& x : r) x *= inv;
    return mod_reduce(IntPoly(r), m);
}

std::vector<LocalFactor> factor_at_precision(const std::vector<IntPoly>& qs, uint64_t p, int K, uint64_t seed) {
    Int pK = ipow(from_u64(p), K);
    std::vector<LocalFactor> out;
    for (auto& q : qs) {
        std::vector<LocalFactor> part;
        ModPoly qb = reduce_mod_p(q, p);
        if (gcd(qb, derivative(qb)).degree() == 0) {
            auto fac = factor_mod_p(qb, seed);
            std::vector<ModPoly> mods;
            for (auto& x : fac) mods.push_back(x.f);
            auto lifted = hensel_lift(q, mods, K);
            for (size_t i = 0; i < lifted.size(); ++i) {
                LocalFactor lf;
                lf.p = p;
                lf.residue = mods[i];
                lf.residue_degree = mods[i].degree();
                lf.approx = lifted[i];
                part.push_back(lf);
            }
        } else {
            for (auto& b : detail::split_locally(q, p, K, seed)) {
                LocalFactor lf;
                lf.p = p;
                lf.residue = b.residue;
                lf.reduction_exponent = b.exponent;
                lf.residue_degree = b.f;
                lf.ramification_index = b.e;
                lf.approx = b.approx;
                part.push_back(lf);
            }
        }
        // Consistency: local degrees add up and the product reproduces q mod p^K.
        int total = 0;
        IntPoly prod = IntPoly::constant(1);
        for (auto& lf : part) {
            total += lf.residue_degree * lf.ramification_index;
            prod = mul_mod(prod, lf.approx, pK);
        }
        if (total != q.degree()) throw InternalError("factor_over_Qp: local degrees do not sum to the degree");
        if (prod != mod_reduce(q, pK)) return {};
        bool symmetric = is_star_symmetric(q);
        for (auto& lf : part) {
            lf.precision = K;
            lf.reduction = reduce_mod_p(lf.approx, p);
            lf.rational_factor = q;
            if (!symmetric) continue;
            auto s = star_mod(lf.approx, pK);
            if (!s) continue;
            int hits = 0;
            for (auto& other : part) hits += (other.approx == *s);
            if (hits != 1) return {};  // star must land on exactly one factor
            lf.star_symmetric = (*s == lf.approx);
        }
        for (auto& lf : part) out.push_back(std::move(lf));
    }
    return out;
}

}  // namespace

SquareClass square_class(const Rat& x, uint64_t p) {
    if (x == 0) throw DomainError("square_class: zero has no square class");
    SquareClass c;
    c.p = p;
    if (p == kInfinity) {
        c.unit = sgn(x);
        return c;
    }
    require_prime(p, "square_class");
    Int num = x.get_num(), den = x.get_den();
    int v = valuation(num, p) - valuation(den, p);
    Int P = from_u64(p);
    while (mpz_divisible_p(num.get_mpz_t(), P.get_mpz_t())) num /= P;
    while (mpz_divisible_p(den.get_mpz_t(), P.get_mpz_t())) den /= P;
    Int u = num * den;  // 1/den and den share a square class
    c.parity = ((v % 2) + 2) % 2;
    if (p == 2) {
        Int r;
        mpz_fdiv_r_ui(r.get_mpz_t(), u.get_mpz_t(), 8);
        c.unit = static_cast<int>(r.get_si());
    } else {
        c.unit = legendre(u, p);
    }
    return c;
}

bool class_eq(const Rat& x, const Rat& y, uint64_t p) { return square_class(x, p) == square_class(y, p); }

std::vector<LocalFactor> factor_over_Qp(const IntPoly& f, uint64_t p, uint64_t seed) {
    require_prime(p, "factor_over_Qp");
    if (!f.is_monic()) throw DomainError("factor_over_Qp: polynomial must be monic");
    if (f.degree() > kMaxLocalDegree) throw DomainError("factor_over_Qp: degree exceeds 64");
    if (f.degree() < 1) return {};
    if (gcd(f, derivative(f)).degree() > 0) throw DomainError("factor_over_Qp: polynomial is not squarefree");
    std::vector<IntPoly> qs;
    for (auto& fac : factor_over_Q(f)) qs.push_back(fac.f);
    Int disc = discriminant(f);
    int K = 2 * valuation(disc, p) + 1;
    for (; K <= kMaxPrecision; K *= 2) {
        check_deadline();
        auto out = factor_at_precision(qs, p, K, seed);
        if (!out.empty()) return out;
    }
    throw Undecided("factor_over_Qp: precision cap exceeded", p);
}

namespace {

std::mutex residue_mutex;
std::map<std::pair<std::vector<Int>, uint64_t>, std::vector<ModPoly>> residue_memo;

// Residues of the *-symmetric local factors of an irreducible symmetric q, memoized.
std::vector<ModPoly> symmetric_residues(const IntPoly& q, uint64_t p) {
    auto key = std::make_pair(q.coeffs(), p);
    {
        std::lock_guard<std::mutex> lock(residue_mutex);
        auto it = residue_memo.find(key);
        if (it != residue_memo.end()) return it->second;
    }
    std::vector<ModPoly> out;
    for (auto& lf : factor_over_Qp(q, p))
        if (lf.star_symmetric) out.push_back(lf.residue);
    std::lock_guard<std::mutex> lock(residue_mutex);
    residue_memo.emplace(std::move(key), out);
    return out;
}

}  // namespace

LocalSymbolSet symbol_set(const IntPoly& f, uint64_t p) {
    require_prime(p, "symbol_set");
    if (!f.is_monic()) throw DomainError("symbol_set: polynomial must be monic");
    LocalSymbolSet out;
    out.p = p;
    for (auto& [q, mult] : factor_over_Q(f)) {
        if (q == IntPoly{-1, 1} || q == IntPoly{1, 1}) {
            out.insert(reduce_mod_p(q, p));
            continue;
        }
        // A *-symmetric local factor of q divides gcd(q, q*), which is 1 unless q is symmetric.
        if (!is_star_symmetric(q)) continue;
        for (auto& r : symmetric_residues(q, p)) out.insert(r);
    }
    return out;
}

PiResult pi_set(const IntPoly& f, const IntPoly& g) {
    if (!f.is_monic() || !g.is_monic()) throw DomainError("pi_set: polynomials must be monic");
    PiResult r;
    r.res = resultant(f, g);
    if (r.res == 0) {
        r.shared_factor = gcd(f, g);
        return r;
    }
    std::vector<uint64_t> cand = prime_divisors(r.res);
    std::vector<std::optional<PiPrime>> hit(cand.size());
    parallel_for(cand.size(), [&](size_t i) {
        uint64_t p = cand[i];
        LocalSymbolSet c = intersect(symbol_set(f, p), symbol_set(g, p));
        if (!c.empty()) hit[i] = PiPrime{p, c.members};
    });
    for (auto& h : hit)
        if (h) r.primes.push_back(*h);
    return r;
}

LocalSymbolSet nonsquare_memberships(const IntPoly& f, uint64_t p) {
    require_prime(p, "nonsquare_memberships");
    if (!is_star_symmetric(f)) throw DomainError("nonsquare_memberships: polynomial is not *-symmetric");
    Int a = f.eval(Int(1)), b = f.eval(Int(-1));
    if (a == 0 || b == 0) throw DomainError("nonsquare_memberships: F(1) F(-1) = 0");
    LocalSymbolSet out;
    out.p = p;
    if (valuation(a, p) % 2) out.insert(reduce_mod_p(IntPoly{-1, 1}, p));
    if (valuation(b, p) % 2) out.insert(reduce_mod_p(IntPoly{1, 1}, p));
    if (p == 2) {
        Int d = a * b;
        if ((f.degree() / 2) % 2) d = -d;
        if (!class_eq(Rat(d), Rat(1), 2) && !class_eq(Rat(d), Rat(-3), 2)) out.insert(reduce_mod_p(IntPoly{-1, 1}, p));
    }
    return out;
}

}  // namespace k3
