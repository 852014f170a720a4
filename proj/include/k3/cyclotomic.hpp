#pragma once

#include <cstdint>
#include <vector>

#include "k3/intpoly.hpp"
#include "k3/symbols.hpp"

namespace k3 {

constexpr uint64_t kMaxCyclotomicIndex = 1000000;

// Phi_n for 1 <= n <= 10^6, memoized.
const IntPoly& cyclotomic(uint64_t n);

uint64_t totient(uint64_t n);
// All n with phi(n) = k, ascending. Uses phi(n) >= sqrt(n/2), so n <= 2k^2.
std::vector<uint64_t> totient_fiber(uint64_t k);

// n = p^e with e >= 1.
bool is_prime_power(uint64_t n, uint64_t* p = nullptr, int* e = nullptr);
// Order of a in (Z/mZ)^x, gcd(a, m) = 1, m >= 2.
uint64_t multiplicative_order(uint64_t a, uint64_t m);
// Whether some r >= 0 has p^r = -1 mod m.
bool power_hits_minus_one(uint64_t p, uint64_t m);

struct CycloShape {
    uint64_t n, p;
    int e;
    uint64_t m;
    uint64_t factor_degree;
    uint64_t factor_count;
    uint64_t power;
    bool symmetric;
};

CycloShape cyclo_shape(uint64_t n, uint64_t p);
LocalSymbolSet cyclo_symbol_set(uint64_t n, uint64_t p);
Int apostol_resultant(uint64_t n, uint64_t n2);
std::vector<uint64_t> pi_cyclo(uint64_t n, uint64_t n2);

struct CSets {
    std::vector<uint64_t> tilde;
    std::vector<uint64_t> c;
};
CSets c_sets(int d);

}  // namespace k3
