#include "k3/hensel.hpp"

#include "k3/deadline.hpp"
#include "k3/errors.hpp"

namespace k3 {

IntPoly mod_reduce(const IntPoly& f, const Int& m) {
    std::vector<Int> v = f.coeffs();
    for (auto& x : v) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return IntPoly(std::move(v));
}

IntPoly mod_symmetric(const IntPoly& f, const Int& m) {
    std::vector<Int> v = f.coeffs();
    Int half = m / 2;
    for (auto& x : v) {
        mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
        if (x > half) x -= m;
    }
    return IntPoly(std::move(v));
}

IntPoly mul_mod(const IntPoly& a, const IntPoly& b, const Int& m) { return mod_reduce(a * b, m); }

std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& b, const Int& m) {
    if (!b.is_monic()) throw InternalError("divmod_monic: divisor is not monic");
    int db = b.degree();
    std::vector<Int> r = mod_reduce(a, m).coeffs();
    if (static_cast<int>(r.size()) - 1 < db) return {IntPoly(), IntPoly(std::move(r))};
    std::vector<Int> q(r.size() - db);
    for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
        Int t = r[i];
        mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t());
        if (t == 0) continue;
        q[i - db] = t;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= t * b.coeffs()[j];
    }
    return {mod_reduce(IntPoly(std::move(q)), m), mod_reduce(IntPoly(std::move(r)), m)};
}

namespace {

// One quadratic step: f = g h mod m, s g + t h = 1 mod m  ->  same relations mod m^2.
void quadratic_step(const IntPoly& f, IntPoly& g, IntPoly& h, IntPoly& s, IntPoly& t, const Int& m2) {
    IntPoly e = mod_reduce(f - g * h, m2);
    auto [q, r] = divmod_monic(s * e, h, m2);
    IntPoly g1 = mod_reduce(g + t * e + q * g, m2);
    IntPoly h1 = mod_reduce(h + r, m2);
    IntPoly b = mod_reduce(s * g1 + t * h1 - IntPoly::constant(1), m2);
    auto [c, d] = divmod_monic(s * b, h1, m2);
    s = mod_reduce(s - d, m2);
    t = mod_reduce(t - t * b - c * g1, m2);
    g = g1;
    h = h1;
}

void lift_rec(const IntPoly& f, const std::vector<ModPoly>& fac, size_t lo, size_t hi, uint64_t p, int k,
              const Int& pk, std::vector<IntPoly>& out) {
    if (hi - lo == 1) {
        out[lo] = mod_reduce(f, pk);
        return;
    }
    size_t mid = (lo + hi) / 2;
    ModPoly G = ModPoly::constant(p, 1), H = ModPoly::constant(p, 1);
    for (size_t i = lo; i < mid; ++i) G *= fac[i];
    for (size_t i = mid; i < hi; ++i) H *= fac[i];
    ModPoly s0(p), t0(p);
    ModPoly one = ext_gcd(G, H, s0, t0);
    if (!one.is_one()) throw InternalError("hensel_lift: factors are not coprime mod p");
    IntPoly g = lift(G), h = lift(H), s = lift(s0), t = lift(t0);
    Int m = from_u64(p);
    int e = 1;
    while (e < k) {
        check_deadline();
        Int m2 = m * m;
        quadratic_step(f, g, h, s, t, m2);
        m = m2;
        e *= 2;
    }
    g = mod_reduce(g, pk);
    h = mod_reduce(h, pk);
    lift_rec(g, fac, lo, mid, p, k, pk, out);
    lift_rec(h, fac, mid, hi, p, k, pk, out);
}

}  // namespace

std::vector<IntPoly> hensel_lift(const IntPoly& f, const std::vector<ModPoly>& factors, int k) {
    if (!f.is_monic()) throw InternalError("hensel_lift: polynomial is not monic");
    if (factors.empty()) throw InternalError("hensel_lift: no factors");
    uint64_t p = factors[0].p();
    Int pk = ipow(from_u64(p), k);
    std::vector<IntPoly> out(factors.size());
    lift_rec(f, factors, 0, factors.size(), p, k, pk, out);
    return out;
}

}  // namespace k3
