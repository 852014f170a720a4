#include "k3/modp.hpp"

#include <algorithm>
#include <random>

#include "k3/deadline.hpp"
#include "k3/errors.hpp"

namespace k3 {

namespace {

uint64_t addm(uint64_t a, uint64_t b, uint64_t p) {
    uint64_t s = a + b;
    if (s < a || s >= p) s -= p;
    return s;
}

uint64_t subm(uint64_t a, uint64_t b, uint64_t p) { return a >= b ? a - b : a + (p - b); }

void require_same_field(const ModPoly& a, const ModPoly& b) {
    if (a.p() != b.p()) throw InternalError("ModPoly: mixed characteristics");
}

}  // namespace

ModPoly::ModPoly(uint64_t p, std::vector<uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (auto& v : c_) v %= p_;
    trim();
}

ModPoly ModPoly::constant(uint64_t p, uint64_t c) { return ModPoly(p, {c}); }
ModPoly ModPoly::x(uint64_t p) { return ModPoly(p, {0, 1}); }

ModPoly ModPoly::monomial(uint64_t p, uint64_t c, int k) {
    std::vector<uint64_t> v(k + 1, 0);
    v[k] = c;
    return ModPoly(p, std::move(v));
}

void ModPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

uint64_t ModPoly::lead() const {
    if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
}

ModPoly ModPoly::monic() const {
    if (c_.empty() || c_.back() == 1) return *this;
    ModPoly r = *this;
    return r.scale(invmod(c_.back(), p_));
}

uint64_t ModPoly::eval(uint64_t x) const {
    uint64_t r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = addm(mulmod(r, x, p_), *it, p_);
    return r;
}

ModPoly& ModPoly::operator+=(const ModPoly& o) {
    require_same_field(*this, o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = addm(c_[i], o.c_[i], p_);
    trim();
    return *this;
}

ModPoly& ModPoly::operator-=(const ModPoly& o) {
    require_same_field(*this, o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = subm(c_[i], o.c_[i], p_);
    trim();
    return *this;
}

ModPoly& ModPoly::operator*=(const ModPoly& o) {
    require_same_field(*this, o);
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<uint64_t> r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = addm(r[i + j], mulmod(c_[i], o.c_[j], p_), p_);
    }
    c_ = std::move(r);
    trim();
    return *this;
}

ModPoly& ModPoly::scale(uint64_t k) {
    k %= p_;
    for (auto& v : c_) v = mulmod(v, k, p_);
    trim();
    return *this;
}

bool operator<(const ModPoly& a, const ModPoly& b) {
    if (a.p() != b.p()) return a.p() < b.p();
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.coeffs()[i] != b.coeffs()[i]) return a.coeffs()[i] < b.coeffs()[i];
    return false;
}

std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    uint64_t p = a.p();
    int db = b.degree();
    if (a.degree() < db) return {ModPoly(p), a};
    std::vector<uint64_t> r = a.coeffs();
    std::vector<uint64_t> q(a.degree() - db + 1, 0);
    uint64_t inv = invmod(b.lead(), p);
    const auto& bc = b.coeffs();
    for (int i = a.degree(); i >= db; --i) {
        if (r[i] == 0) continue;
        uint64_t t = mulmod(r[i], inv, p);
        q[i - db] = t;
        for (int j = 0; j <= db; ++j) r[i - db + j] = subm(r[i - db + j], mulmod(t, bc[j], p), p);
    }
    return {ModPoly(p, std::move(q)), ModPoly(p, std::move(r))};
}

ModPoly operator%(const ModPoly& a, const ModPoly& b) { return divmod(a, b).second; }

ModPoly divexact(const ModPoly& a, const ModPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw InternalError("ModPoly divexact: nonzero remainder");
    return q;
}

ModPoly gcd(const ModPoly& a, const ModPoly& b) {
    ModPoly x = a, y = b;
    while (!y.is_zero()) {
        ModPoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

ModPoly ext_gcd(const ModPoly& a, const ModPoly& b, ModPoly& s, ModPoly& t) {
    uint64_t p = a.p();
    ModPoly r0 = a, r1 = b;
    ModPoly s0 = ModPoly::constant(p, 1), s1(p), t0(p), t1 = ModPoly::constant(p, 1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        ModPoly s2 = s0 - q * s1;
        ModPoly t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) {
        s = s0;
        t = t0;
        return r0;
    }
    uint64_t inv = invmod(r0.lead(), p);
    s = s0.scale(inv);
    t = t0.scale(inv);
    return r0.scale(inv);
}

ModPoly derivative(const ModPoly& f) {
    std::vector<uint64_t> v;
    for (int i = 1; i <= f.degree(); ++i) v.push_back(mulmod(f.coeffs()[i], static_cast<uint64_t>(i) % f.p(), f.p()));
    return ModPoly(f.p(), std::move(v));
}

ModPoly pow(const ModPoly& f, unsigned e) {
    ModPoly r = ModPoly::constant(f.p(), 1), b = f;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

ModPoly powmod(const ModPoly& base, const Int& e, const ModPoly& mod) {
    ModPoly r = ModPoly::constant(base.p(), 1) % mod;
    ModPoly b = base % mod;
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return r;
    for (size_t i = bits; i-- > 0;) {
        r = (r * r) % mod;
        if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * b) % mod;
        check_deadline();
    }
    return r;
}

ModPoly reduce_mod_p(const IntPoly& f, uint64_t p) {
    if (!is_prime_u64(p)) throw DomainError("reduce_mod_p: " + std::to_string(p) + " is not prime");
    std::vector<uint64_t> v;
    Int P = from_u64(p), r;
    for (auto& c : f.coeffs()) {
        mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), P.get_mpz_t());
        v.push_back(to_u64(r));
    }
    return ModPoly(p, std::move(v));
}

IntPoly lift(const ModPoly& f) {
    std::vector<Int> v;
    for (auto c : f.coeffs()) v.push_back(from_u64(c));
    return IntPoly(std::move(v));
}

// ---------------------------------------------------------------- factorization

namespace {

ModPoly pth_root(const ModPoly& f) {
    uint64_t p = f.p();
    std::vector<uint64_t> v;
    for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) v.push_back(f.coeffs()[i]);
    return ModPoly(p, std::move(v));
}

void sqf_rec(const ModPoly& f, int scale, std::vector<ModFactor>& out) {
    uint64_t p = f.p();
    ModPoly g = gcd(f, derivative(f));
    ModPoly w = divexact(f, g);
    int i = 1;
    while (w.degree() > 0) {
        ModPoly y = gcd(w, g);
        ModPoly z = divexact(w, y);
        if (z.degree() > 0) out.push_back({z, i * scale});
        ++i;
        w = y;
        g = divexact(g, y);
    }
    if (g.degree() > 0) {
        // Remaining part is a p-th power; it only occurs for p <= degree.
        if (p > static_cast<uint64_t>(kMaxDegree) * 64) throw InternalError("sqf: unexpected p-th power");
        sqf_rec(pth_root(g), scale * static_cast<int>(p), out);
    }
}

std::vector<std::pair<ModPoly, int>> distinct_degree(ModPoly f) {
    uint64_t p = f.p();
    std::vector<std::pair<ModPoly, int>> out;
    ModPoly X = ModPoly::x(p);
    ModPoly h = X % f;
    Int P = from_u64(p);
    for (int i = 1; 2 * i <= f.degree(); ++i) {
        h = powmod(h, P, f);
        ModPoly g = gcd(h - X, f);
        if (g.degree() > 0) {
            out.emplace_back(g, i);
            f = divexact(f, g);
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f, f.degree());
    return out;
}

ModPoly random_poly(uint64_t p, int deg_below, std::mt19937_64& rng) {
    std::uniform_int_distribution<uint64_t> dist(0, p - 1);
    std::vector<uint64_t> v(deg_below);
    for (auto& x : v) x = dist(rng);
    return ModPoly(p, std::move(v));
}

void equal_degree(const ModPoly& g, int d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
    if (g.degree() == d) {
        out.push_back(g);
        return;
    }
    uint64_t p = g.p();
    Int e;
    if (p != 2) e = (ipow(from_u64(p), d) - 1) / 2;
    while (true) {
        check_deadline();
        ModPoly a = random_poly(p, g.degree(), rng);
        if (a.degree() < 1) continue;
        ModPoly b(p);
        if (p == 2) {
            ModPoly t = a;
            b = a;
            for (int j = 1; j < d; ++j) {
                t = (t * t) % g;
                b += t;
            }
        } else {
            b = powmod(a, e, g) - ModPoly::constant(p, 1);
        }
        ModPoly u = gcd(b, g);
        if (u.degree() > 0 && u.degree() < g.degree()) {
            equal_degree(u, d, rng, out);
            equal_degree(divexact(g, u), d, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<ModFactor> squarefree_decomposition(const ModPoly& f) {
    if (f.is_zero()) throw DomainError("squarefree decomposition of zero");
    std::vector<ModFactor> out;
    sqf_rec(f.monic(), 1, out);
    return out;
}

std::vector<ModFactor> factor_mod_p(const ModPoly& f, uint64_t seed) {
    if (f.is_zero()) throw DomainError("factor_mod_p: zero polynomial");
    if (!f.is_monic()) throw DomainError("factor_mod_p: polynomial is not monic");
    std::mt19937_64 rng(seed);
    std::vector<ModFactor> out;
    for (auto& [part, mult] : squarefree_decomposition(f)) {
        for (auto& [g, d] : distinct_degree(part)) {
            std::vector<ModPoly> pieces;
            equal_degree(g, d, rng, pieces);
            for (auto& q : pieces) out.push_back({q, mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const ModFactor& a, const ModFactor& b) { return a.f < b.f; });
    // Merge equal factors that arrived from different squarefree layers (cannot happen, kept defensive).
    std::vector<ModFactor> merged;
    for (auto& x : out) {
        if (!merged.empty() && merged.back().f == x.f)
            merged.back().mult += x.mult;
        else
            merged.push_back(x);
    }
    return merged;
}

bool is_irreducible_mod_p(const ModPoly& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    ModPoly g = f.monic();
    auto sq = squarefree_decomposition(g);
    if (sq.size() != 1 || sq[0].mult != 1) return false;
    auto dd = distinct_degree(g);
    return dd.size() == 1 && dd[0].second == g.degree();
}

ModPoly star_mod_p(const ModPoly& f) {
    if (f.is_zero() || f.coeffs()[0] == 0) throw DomainError("star_mod_p: f(0) = 0");
    std::vector<uint64_t> v(f.coeffs().rbegin(), f.coeffs().rend());
    ModPoly r(f.p(), std::move(v));
    return r.scale(invmod(f.coeffs()[0], f.p()));
}

bool is_star_symmetric_mod_p(const ModPoly& f) {
    if (!f.is_monic()) throw DomainError("is_star_symmetric_mod_p: polynomial is not monic");
    return star_mod_p(f) == f;
}

std::string to_string(const ModPoly& f) {
    return to_string(lift(f)) + " mod " + std::to_string(f.p());
}

}  // namespace k3
