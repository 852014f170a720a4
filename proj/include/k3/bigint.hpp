#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace k3 {

using Int = mpz_class;
using Rat = mpq_class;

Int from_u64(uint64_t v);
uint64_t to_u64(const Int& v);  // requires 0 <= v < 2^64
bool fits_u64(const Int& v);

Int ipow(const Int& base, unsigned long e);

// Zero counts as a square.
bool is_square(const Int& x);

// v_p(x) for x != 0.
int valuation(const Int& x, const Int& p);
int valuation(const Int& x, uint64_t p);

// Deterministic Miller-Rabin below 2^64.
bool is_prime_u64(uint64_t n);

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod(uint64_t a, uint64_t e, uint64_t m);
uint64_t invmod(uint64_t a, uint64_t m);  // m prime, a != 0 mod m

// Factorisation of |x|, x != 0, as sorted (prime, exponent) pairs.
// Prime factors above 2^64 raise Unsupported; an exhausted rho budget raises Undecided.
std::vector<std::pair<uint64_t, int>> factor_integer(const Int& x);
std::vector<uint64_t> prime_divisors(const Int& x);

}  // namespace k3
