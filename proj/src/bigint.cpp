#include "k3/bigint.hpp"

#include <algorithm>
#include <map>

#include "k3/deadline.hpp"
#include "k3/errors.hpp"

namespace k3 {

Int from_u64(uint64_t v) {
    Int r;
    mpz_import(r.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
    return r;
}

bool fits_u64(const Int& v) { return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64; }

uint64_t to_u64(const Int& v) {
    if (!fits_u64(v)) throw InternalError("to_u64: out of range");
    uint64_t r = 0;
    mpz_export(&r, nullptr, -1, sizeof r, 0, 0, v.get_mpz_t());
    return r;
}

Int ipow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

bool is_square(const Int& x) { return sgn(x) >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0; }

int valuation(const Int& x, const Int& p) {
    if (x == 0) throw DomainError("valuation of zero");
    Int t = x;
    int v = 0;
    while (mpz_divisible_p(t.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

int valuation(const Int& x, uint64_t p) { return valuation(x, from_u64(p)); }

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

uint64_t invmod(uint64_t a, uint64_t m) {
    a %= m;
    if (a == 0) throw DomainError("invmod: zero is not invertible");
    return powmod(a, m - 2, m);
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Bases known to be deterministic for all n < 2^64.
    for (uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
        uint64_t x = powmod(a, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

bool probably_prime(const Int& n) {
    if (fits_u64(n)) return is_prime_u64(to_u64(n));
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor or 0 on budget exhaustion.
Int rho(const Int& n, unsigned long c) {
    const long budget = 1L << 26;
    Int y = 2, x, ys, q = 1, g = 1, t;
    long r = 1, iters = 0;
    auto f = [&](Int& v) {
        v = v * v + c;
        mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    const long m = 128;
    while (g == 1) {
        x = y;
        for (long i = 0; i < r; ++i) f(y);
        long k = 0;
        while (k < r && g == 1) {
            ys = y;
            long lim = std::min(m, r - k);
            for (long i = 0; i < lim; ++i) {
                f(y);
                t = x - y;
                q = q * abs(t);
                mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            g = gcd(q, n);
            k += m;
            iters += lim;
            check_deadline();
            if (iters > budget) return 0;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            f(ys);
            t = x - ys;
            g = gcd(abs(t), n);
        } while (g == 1);
    }
    return g;
}

void split(const Int& n, std::map<Int, int>& out) {
    if (n == 1) return;
    if (probably_prime(n)) {
        out[n] += 1;
        return;
    }
    if (is_square(n)) {
        Int s = sqrt(n);
        split(s, out);
        split(s, out);
        return;
    }
    for (unsigned long c = 1; c < 64; ++c) {
        Int d = rho(n, c);
        if (d == 0) break;
        if (d != n) {
            split(d, out);
            split(n / d, out);
            return;
        }
    }
    throw Undecided("integer factorisation budget exceeded for " + n.get_str());
}

}  // namespace

std::vector<std::pair<uint64_t, int>> factor_integer(const Int& x) {
    if (x == 0) throw DomainError("factor_integer: zero");
    Int n = abs(x);
    std::map<Int, int> found;
    for (unsigned long q = 2; q < 1u << 16; q += (q == 2 ? 1 : 2)) {
        if (Int(q) * q > n) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), q)) {
            found[Int(q)] += 1;
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), q);
        }
    }
    split(n, found);
    std::vector<std::pair<uint64_t, int>> out;
    for (auto& [p, e] : found) {
        if (!fits_u64(p)) throw Unsupported("prime factor exceeds 64 bits: " + p.get_str());
        out.emplace_back(to_u64(p), e);
    }
    return out;
}

std::vector<uint64_t> prime_divisors(const Int& x) {
    std::vector<uint64_t> ps;
    for (auto& [p, e] : factor_integer(x)) ps.push_back(p);
    return ps;
}

}  // namespace k3
