#include <algorithm>

#include "k3/cyclotomic.hpp"
#include "k3/deadline.hpp"
#include "k3/errors.hpp"
#include "k3/hensel.hpp"
#include "k3/intpoly.hpp"
#include "k3/modp.hpp"

namespace k3 {

std::vector<Factor> squarefree_decomposition(const IntPoly& f) {
    if (!f.is_monic()) throw DomainError("squarefree_decomposition: polynomial is not monic");
    // Yun's algorithm over Q; monic gcds of monic integer polynomials stay integral.
    std::vector<Factor> out;
    RatPoly F(f);
    RatPoly d = RatPoly(derivative(f));
    RatPoly a = gcd(F, d);
    RatPoly b = divmod(F, a).first;
    RatPoly c = divmod(d, a).first;
    RatPoly bp = RatPoly(derivative(b.to_int()));
    RatPoly dd = c - bp;
    int i = 1;
    while (b.degree() > 0) {
        check_deadline();
        RatPoly g = gcd(b, dd);
        RatPoly bn = divmod(b, g).first;
        RatPoly cn = divmod(dd, g).first;
        if (g.degree() > 0) out.push_back({g.to_int(), i});
        b = bn;
        dd = cn - RatPoly(derivative(b.to_int()));
        ++i;
    }
    return out;
}

namespace {

Int mignotte_bound(const IntPoly& f) {
    Int s = 0;
    for (auto& c : f.coeffs()) s += c * c;
    Int norm = sqrt(s) + 1;
    return ipow(Int(2), f.degree()) * norm;
}

// Factor a monic squarefree polynomial with no cyclotomic factors by Zassenhaus.
void zassenhaus(const IntPoly& f, std::vector<IntPoly>& out) {
    if (f.degree() <= 1) {
        if (f.degree() == 1) out.push_back(f);
        return;
    }
    // Pick the prime (among several good ones) giving the fewest modular factors.
    std::vector<ModFactor> best;
    uint64_t bestp = 0;
    int tried = 0;
    for (uint64_t p = 3; tried < 8 && p < 100000; p += 2) {
        if (!is_prime_u64(p)) continue;
        ModPoly fb = reduce_mod_p(f, p);
        if (gcd(fb, derivative(fb)).degree() > 0) continue;
        ++tried;
        auto fac = factor_mod_p(fb);
        if (bestp == 0 || fac.size() < best.size()) {
            best = fac;
            bestp = p;
        }
        if (best.size() == 1) break;
    }
    if (bestp == 0) throw InternalError("zassenhaus: no good prime found");
    if (best.size() == 1) {
        out.push_back(f);
        return;
    }
    Int bound = 2 * mignotte_bound(f) + 1;
    int k = 1;
    Int pk = from_u64(bestp);
    while (pk <= bound) {
        pk *= bestp;
        ++k;
    }
    std::vector<ModPoly> mods;
    for (auto& x : best) mods.push_back(x.f);
    std::vector<IntPoly> lifted = hensel_lift(f, mods, k);

    IntPoly rest = f;
    std::vector<bool> used(lifted.size(), false);
    size_t remaining = lifted.size();
    for (size_t s = 1; 2 * s <= remaining; ++s) {
        bool again = true;
        while (again) {
            again = false;
            std::vector<size_t> live;
            for (size_t i = 0; i < lifted.size(); ++i)
                if (!used[i]) live.push_back(i);
            if (2 * s > live.size()) break;
            std::vector<size_t> idx(s);
            for (size_t i = 0; i < s; ++i) idx[i] = i;
            while (true) {
                check_deadline();
                IntPoly g = IntPoly::constant(1);
                for (auto i : idx) g = mul_mod(g, lifted[live[i]], pk);
                g = mod_symmetric(g, pk);
                IntPoly q;
                bool constant_ok = g.coeffs()[0] != 0 && rest.coeffs()[0] % g.coeffs()[0] == 0;
                if (constant_ok && divides(g, rest, &q)) {
                    out.push_back(g);
                    rest = q;
                    for (auto i : idx) used[live[i]] = true;
                    remaining -= s;
                    again = true;
                    break;
                }
                // next combination
                int pos = static_cast<int>(s) - 1;
                while (pos >= 0 && idx[pos] == live.size() - s + pos) --pos;
                if (pos < 0) break;
                ++idx[pos];
                for (size_t j = pos + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
    }
    if (rest.degree() > 0) out.push_back(rest);
}

}  // namespace

std::vector<Factor> factor_over_Q(const IntPoly& f) {
    if (f.is_zero() || !f.is_monic()) throw DomainError("factor_over_Q: polynomial must be monic and nonzero");
    require_degree_guard(f);
    std::vector<Factor> out;
    IntPoly g = f;
    // Powers of X are split off first.
    int xpow = 0;
    while (g.degree() > 0 && g.coeffs()[0] == 0) {
        g = divexact(g, IntPoly{0, 1});
        ++xpow;
    }
    if (xpow) out.push_back({IntPoly{0, 1}, xpow});
    for (auto& [a, mult] : squarefree_decomposition(g)) {
        IntPoly rest = a;
        // Cyclotomic factors are removed by trial division; they would otherwise
        // split into many modular factors and inflate the recombination search.
        std::vector<IntPoly> pieces;
        if (rest.coeffs()[0] == 1 || rest.coeffs()[0] == -1) {
            for (uint64_t n = 1; rest.degree() > 0 && n <= 2ull * rest.degree() * rest.degree() + 2; ++n) {
                if (static_cast<int>(totient(n)) > rest.degree()) continue;
                IntPoly q;
                if (divides(cyclotomic(n), rest, &q)) {
                    pieces.push_back(cyclotomic(n));
                    rest = q;
                }
            }
        }
        zassenhaus(rest, pieces);
        for (auto& p : pieces) out.push_back({p, mult});
    }
    std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return a.f < b.f; });
    return out;
}

}  // namespace k3
