#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "k3/bigint.hpp"

namespace k3 {

// Dense polynomial over Z, ascending coefficients, no trailing zeros.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(const Int& c);
    static IntPoly monomial(const Int& c, int k);
    static IntPoly x_minus(const Int& a);  // X - a

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(int i) const;
    const Int& lead() const;
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const IntPoly& o);
    IntPoly& operator*=(const Int& k);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }
    friend IntPoly operator*(IntPoly a, const Int& k) { return a *= k; }
    friend IntPoly operator-(IntPoly a) { return a *= Int(-1); }
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

private:
    void trim();
    std::vector<Int> c_;
};

// Canonical order: by degree, then coefficients from the top down.
bool operator<(const IntPoly& a, const IntPoly& b);

// Dense polynomial over Q.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs);
    explicit RatPoly(const IntPoly& p);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int i) const;
    const Rat& lead() const;
    Rat eval(const Rat& x) const;

    RatPoly& operator+=(const RatPoly& o);
    RatPoly& operator-=(const RatPoly& o);
    RatPoly& operator*=(const RatPoly& o);
    RatPoly& operator*=(const Rat& k);
    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator*(RatPoly a, const RatPoly& b) { return a *= b; }
    friend RatPoly operator*(RatPoly a, const Rat& k) { return a *= k; }
    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

    bool is_integral() const;
    IntPoly to_int() const;  // requires integral coefficients
    RatPoly monic() const;

private:
    void trim();
    std::vector<Rat> c_;
};

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly gcd(const RatPoly& a, const RatPoly& b);  // monic, or zero

IntPoly pow(const IntPoly& f, unsigned e);
IntPoly derivative(const IntPoly& f);
Int content(const IntPoly& f);          // nonnegative
IntPoly primitive_part(const IntPoly& f);  // positive leading coefficient
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b);
// Exact quotient a / b over Z; raises DomainError if b does not divide a.
IntPoly divexact(const IntPoly& a, const IntPoly& b);
bool divides(const IntPoly& b, const IntPoly& a, IntPoly* quotient = nullptr);
// Primitive gcd with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);
IntPoly compose_x_plus(const IntPoly& f, const Int& a);  // f(X + a)

// Text format: "coeffs:c0,c1,..." or display form such as "X^4 - X^2 + 1".
IntPoly parse_poly(const std::string& text);
std::string to_string(const IntPoly& f);
std::string to_string(const RatPoly& f);

constexpr int kMaxDegree = 64;
void require_degree_guard(const IntPoly& f);

// F(0)^{-1} X^deg F(1/X) for monic F with F(0) != 0.
RatPoly star(const IntPoly& f);
enum class Symmetry { plus, minus, none };
Symmetry classify_symmetry(const IntPoly& f);
const char* to_string(Symmetry s);
// Non-throwing predicate: monic, F(0) != 0 and F* = F.
bool is_star_symmetric(const IntPoly& f);

// h with f(X) = X^n h(X + 1/X), for +1-symmetric f of degree 2n.
IntPoly trace_polynomial(const IntPoly& f);
// X^n h(X + 1/X) for h of degree n.
IntPoly symmetric_lift(const IntPoly& h);

Int resultant(const IntPoly& f, const IntPoly& g);
Int discriminant(const IntPoly& f);  // of monic f: (-1)^{n(n-1)/2} Res(f, f')

// Number of real roots of squarefree h in the open interval (a, b).
int sturm_count(const IntPoly& h, const Rat& a, const Rat& b);
// Disjoint ascending isolating intervals (lo, hi), one root each, for roots in (a, b).
std::vector<std::pair<Rat, Rat>> isolate_roots(const IntPoly& h, const Rat& a, const Rat& b);
// 1 + max |coefficient| of monic h; every real root lies in (-B, B).
Int cauchy_bound(const IntPoly& h);

struct Factor {
    IntPoly f;
    int mult;
};

// Complete factorization of monic F into monic irreducibles over Q, canonically ordered.
std::vector<Factor> factor_over_Q(const IntPoly& f);
// Squarefree decomposition: monic squarefree pairwise coprime A_i with F = prod A_i^i.
std::vector<Factor> squarefree_decomposition(const IntPoly& f);

struct Type2Pair {
    IntPoly g;
    IntPoly g_star;
    int mult;
};

struct SymmetricDecomposition {
    IntPoly input;
    int m_plus = 0;
    int m_minus = 0;
    std::vector<Factor> type1;
    std::vector<Type2Pair> type2;
    int symmetry_sign = 1;
    IntPoly f12;  // input / ((X-1)^m_plus (X+1)^m_minus)
};

SymmetricDecomposition decompose(const IntPoly& f);

struct CircleProfile {
    std::vector<int> pairs;  // aligned with type1
    // Isolating intervals for the traces of each circle pair, ascending; aligned with type1.
    std::vector<std::vector<std::pair<Rat, Rat>>> traces;
    int N = 0;
    int mF = 0;
    int eF12 = 1;
};

CircleProfile circle_profile(const SymmetricDecomposition& d);

// Sign of (-1)^{deg P/2} P(1) P(-1) for *-symmetric P of even degree with P(1)P(-1) != 0.
int e_sign(const IntPoly& p);

}  // namespace k3
