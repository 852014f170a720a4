#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "k3/bigint.hpp"
#include "k3/intpoly.hpp"

namespace k3 {

constexpr uint64_t kDefaultSeed = 0x5eed5eedULL;

// Polynomial over F_p, ascending residues in [0, p), no trailing zeros.
class ModPoly {
public:
    explicit ModPoly(uint64_t p = 2) : p_(p) {}
    ModPoly(uint64_t p, std::vector<uint64_t> coeffs);

    static ModPoly constant(uint64_t p, uint64_t c);
    static ModPoly x(uint64_t p);
    static ModPoly monomial(uint64_t p, uint64_t c, int k);

    uint64_t p() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const std::vector<uint64_t>& coeffs() const { return c_; }
    uint64_t coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0; }
    uint64_t lead() const;
    ModPoly monic() const;
    uint64_t eval(uint64_t x) const;

    ModPoly& operator+=(const ModPoly& o);
    ModPoly& operator-=(const ModPoly& o);
    ModPoly& operator*=(const ModPoly& o);
    ModPoly& scale(uint64_t k);
    friend ModPoly operator+(ModPoly a, const ModPoly& b) { return a += b; }
    friend ModPoly operator-(ModPoly a, const ModPoly& b) { return a -= b; }
    friend ModPoly operator*(ModPoly a, const ModPoly& b) { return a *= b; }
    friend bool operator==(const ModPoly& a, const ModPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
    friend bool operator!=(const ModPoly& a, const ModPoly& b) { return !(a == b); }

private:
    void trim();
    uint64_t p_;
    std::vector<uint64_t> c_;
};

// Canonical order: by degree, then residues from the top down.
bool operator<(const ModPoly& a, const ModPoly& b);

std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b);
ModPoly operator%(const ModPoly& a, const ModPoly& b);
ModPoly divexact(const ModPoly& a, const ModPoly& b);
ModPoly gcd(const ModPoly& a, const ModPoly& b);  // monic or zero
// Returns monic g = s a + t b.
ModPoly ext_gcd(const ModPoly& a, const ModPoly& b, ModPoly& s, ModPoly& t);
ModPoly derivative(const ModPoly& f);
ModPoly pow(const ModPoly& f, unsigned e);
ModPoly powmod(const ModPoly& base, const Int& e, const ModPoly& mod);

ModPoly reduce_mod_p(const IntPoly& f, uint64_t p);
// Lift with residues in [0, p).
IntPoly lift(const ModPoly& f);

struct ModFactor {
    ModPoly f;
    int mult;
};

std::vector<ModFactor> squarefree_decomposition(const ModPoly& f);
std::vector<ModFactor> factor_mod_p(const ModPoly& f, uint64_t seed = kDefaultSeed);
bool is_irreducible_mod_p(const ModPoly& f);

ModPoly star_mod_p(const ModPoly& f);
bool is_star_symmetric_mod_p(const ModPoly& f);

// Display form followed by " mod p".
std::string to_string(const ModPoly& f);

}  // namespace k3
