#include "k3/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "k3/errors.hpp"
#include "k3/modp.hpp"
#include "k3/obstruction.hpp"

namespace k3 {

namespace {

std::vector<std::pair<uint64_t, int>> small_factor(uint64_t n) {
    std::vector<std::pair<uint64_t, int>> f;
    for (uint64_t q = 2; q * q <= n; ++q) {
        if (n % q) continue;
        int e = 0;
        while (n % q == 0) {
            n /= q;
            ++e;
        }
        f.emplace_back(q, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

// Multiply by (X^d - 1) in place.
void mul_binomial(std::vector<Int>& a, uint64_t d) {
    size_t old = a.size();
    a.resize(old + d);
    for (size_t i = a.size(); i-- > 0;) {
        Int v = -a[i] * (i < old ? 1 : 0);
        if (i >= d) v += a[i - d];
        a[i] = v;
    }
}

// Exact division by (X^d - 1) in place.
void div_binomial(std::vector<Int>& a, uint64_t d) {
    size_t n = a.size();
    if (n <= d) throw InternalError("cyclotomic: inexact binomial division");
    size_t qn = n - d;
    std::vector<Int> q(qn);
    // a[i] = q[i-d] - q[i]  =>  q[i-d] = a[i] + q[i]
    for (size_t i = n; i-- > d;) q[i - d] = a[i] + (i < qn ? q[i] : Int(0));
    for (size_t i = 0; i < d; ++i)
        if (a[i] != -(i < qn ? q[i] : Int(0))) throw InternalError("cyclotomic: inexact binomial division");
    a = std::move(q);
}

IntPoly compute_cyclotomic(uint64_t n) {
    auto fac = small_factor(n);
    uint64_t rad = 1;
    for (auto& [q, e] : fac) rad *= q;
    // Phi_rad = prod_{d | rad} (X^d - 1)^{mu(rad/d)}; numerators first, then exact divisions.
    std::vector<uint64_t> num, den;
    size_t k = fac.size();
    for (uint64_t mask = 0; mask < (1ull << k); ++mask) {
        uint64_t d = 1;
        int bits = 0;
        for (size_t i = 0; i < k; ++i) {
            if (mask & (1ull << i)) {
                d *= fac[i].first;
                ++bits;
            }
        }
        // mu(rad/d) = (-1)^{k - bits}
        ((k - bits) % 2 == 0 ? num : den).push_back(d);
    }
    std::vector<Int> a{Int(1)};
    for (auto d : num) mul_binomial(a, d);
    for (auto d : den) div_binomial(a, d);
    // Phi_n(X) = Phi_rad(X^{n/rad})
    uint64_t s = n / rad;
    std::vector<Int> out((a.size() - 1) * s + 1);
    for (size_t i = 0; i < a.size(); ++i) out[i * s] = a[i];
    return IntPoly(std::move(out));
}

std::mutex memo_mutex;
std::map<uint64_t, std::unique_ptr<IntPoly>> memo;

}  // namespace

const IntPoly& cyclotomic(uint64_t n) {
    if (n == 0) throw DomainError("cyclotomic: n must be positive");
    if (n > kMaxCyclotomicIndex) throw DomainError("cyclotomic: n exceeds 10^6");
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(n);
        if (it != memo.end()) return *it->second;
    }
    auto poly = std::make_unique<IntPoly>(compute_cyclotomic(n));
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto [it, inserted] = memo.emplace(n, std::move(poly));
    return *it->second;
}

uint64_t totient(uint64_t n) {
    if (n == 0) throw DomainError("totient: n must be positive");
    uint64_t r = n;
    for (auto& [q, e] : small_factor(n)) r = r / q * (q - 1);
    return r;
}

std::vector<uint64_t> totient_fiber(uint64_t k) {
    if (k == 0) throw DomainError("totient_fiber: k must be positive");
    std::vector<uint64_t> out;
    for (uint64_t n = 1; n <= 2 * k * k; ++n)
        if (totient(n) == k) out.push_back(n);
    return out;
}

bool is_prime_power(uint64_t n, uint64_t* p, int* e) {
    if (n < 2) return false;
    auto f = small_factor(n);
    if (f.size() != 1) return false;
    if (p) *p = f[0].first;
    if (e) *e = f[0].second;
    return true;
}

uint64_t multiplicative_order(uint64_t a, uint64_t m) {
    if (m < 2) return 1;
    a %= m;
    uint64_t x = a, r = 1;
    while (x != 1) {
        x = mulmod(x, a, m);
        ++r;
        if (r > m) throw DomainError("multiplicative_order: not a unit");
    }
    return r;
}

bool power_hits_minus_one(uint64_t p, uint64_t m) {
    if (m <= 2) return true;
    uint64_t ord = multiplicative_order(p, m);
    uint64_t x = 1;
    for (uint64_t r = 0; r < ord; ++r) {
        if (x == m - 1) return true;
        x = mulmod(x, p % m, m);
    }
    return false;
}

CycloShape cyclo_shape(uint64_t n, uint64_t p) {
    if (n == 0) throw DomainError("cyclo_shape: n must be positive");
    if (!is_prime_u64(p)) throw DomainError("cyclo_shape: p is not prime");
    CycloShape s{n, p, 0, n, 1, 1, 1, true};
    while (s.m % p == 0) {
        s.m /= p;
        ++s.e;
    }
    s.power = s.e == 0 ? 1 : totient(n / s.m);
    if (s.m <= 2) return s;
    s.factor_degree = multiplicative_order(p, s.m);
    s.factor_count = totient(s.m) / s.factor_degree;
    s.symmetric = power_hits_minus_one(p, s.m);
    return s;
}

LocalSymbolSet cyclo_symbol_set(uint64_t n, uint64_t p) {
    CycloShape s = cyclo_shape(n, p);
    LocalSymbolSet out;
    out.p = p;
    if (s.m == 1) {
        out.insert(ModPoly(p, {p - 1, 1}));
    } else if (s.m == 2) {
        out.insert(ModPoly(p, {1, 1}));
    } else if (s.symmetric) {
        for (auto& [q, mult] : factor_mod_p(reduce_mod_p(cyclotomic(s.m), p))) out.insert(q);
    }
    return out;
}

Int apostol_resultant(uint64_t n, uint64_t n2) {
    if (n <= n2 || n2 == 0) throw DomainError("apostol_resultant: requires n > n' >= 1");
    uint64_t p = 0;
    if (n2 == 1) {
        // Res(Phi_n, X - 1) = (-1)^{phi(n)} Phi_n(1)
        Int v = is_prime_power(n, &p) ? from_u64(p) : Int(1);
        return n == 2 ? Int(-v) : v;
    }
    if (n % n2 == 0 && is_prime_power(n / n2, &p)) return ipow(from_u64(p), totient(n2));
    return 1;
}

std::vector<uint64_t> pi_cyclo(uint64_t n, uint64_t n2) {
    if (n == n2) throw DomainError("pi_cyclo: requires n != n'");
    if (n < n2) std::swap(n, n2);
    if (n2 == 0) throw DomainError("pi_cyclo: indices must be positive");
    uint64_t p = 0;
    if (n % n2 != 0 || !is_prime_power(n / n2, &p)) return {};
    uint64_t m = n;
    while (m % p == 0) m /= p;
    if (power_hits_minus_one(p, m)) return {p};
    return {};
}

CSets c_sets(int d) {
    if (d != 10 && d != 18) throw DomainError("c_sets: d must be 10 or 18");
    uint64_t bound = static_cast<uint64_t>(22 - d);
    CSets out;
    // phi(l) <= bound forces l <= 2 bound^2.
    for (uint64_t l = 1; l <= 2 * bound * bound; ++l) {
        uint64_t ph = totient(l);
        if (ph < bound || (ph == bound && check_square(cyclotomic(l)).holds)) out.tilde.push_back(l);
    }
    for (auto l : out.tilde)
        if (!(d == 10 && l == 20)) out.c.push_back(l);
    return out;
}

}  // namespace k3
