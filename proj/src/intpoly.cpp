#include "k3/intpoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "k3/deadline.hpp"
#include "k3/errors.hpp"

namespace k3 {

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

IntPoly IntPoly::constant(const Int& c) { return IntPoly(std::vector<Int>{c}); }

IntPoly IntPoly::monomial(const Int& c, int k) {
    std::vector<Int> v(k + 1);
    v[k] = c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::x_minus(const Int& a) { return IntPoly(std::vector<Int>{-a, Int(1)}); }

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Int IntPoly::coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Int(0); }

const Int& IntPoly::lead() const {
    if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
}

Int IntPoly::eval(const Int& x) const {
    Int r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

Rat IntPoly::eval(const Rat& x) const {
    Rat r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + Rat(*it);
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Int> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

IntPoly& IntPoly::operator*=(const Int& k) {
    for (auto& v : c_) v *= k;
    trim();
    return *this;
}

bool operator<(const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        int c = cmp(a.coeffs()[i], b.coeffs()[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

// ---------------------------------------------------------------- RatPoly

RatPoly::RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(const IntPoly& p) {
    for (auto& v : p.coeffs()) c_.emplace_back(v);
}

void RatPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat RatPoly::coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rat(0); }

const Rat& RatPoly::lead() const {
    if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
}

Rat RatPoly::eval(const Rat& x) const {
    Rat r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rat> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    c_ = std::move(r);
    trim();
    return *this;
}

RatPoly& RatPoly::operator*=(const Rat& k) {
    for (auto& v : c_) v *= k;
    trim();
    return *this;
}

bool RatPoly::is_integral() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& v) { return v.get_den() == 1; });
}

IntPoly RatPoly::to_int() const {
    if (!is_integral()) throw InternalError("RatPoly::to_int on non-integral polynomial");
    std::vector<Int> v;
    for (auto& x : c_) v.push_back(x.get_num());
    return IntPoly(std::move(v));
}

RatPoly RatPoly::monic() const {
    if (c_.empty()) return *this;
    return *this * Rat(1 / lead());
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    std::vector<Rat> r = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {RatPoly(), a};
    std::vector<Rat> q(a.degree() - db + 1);
    Rat inv = 1 / b.lead();
    for (int i = a.degree(); i >= db; --i) {
        if (r[i] == 0) continue;
        Rat t = r[i] * inv;
        q[i - db] = t;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= t * b.coeffs()[j];
    }
    return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly x = a, y = b;
    while (!y.is_zero()) {
        RatPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

// ---------------------------------------------------------------- Z[X] helpers

IntPoly pow(const IntPoly& f, unsigned e) {
    IntPoly r = IntPoly::constant(1), b = f;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

IntPoly derivative(const IntPoly& f) {
    std::vector<Int> v;
    for (int i = 1; i <= f.degree(); ++i) v.push_back(f.coeffs()[i] * i);
    return IntPoly(std::move(v));
}

Int content(const IntPoly& f) {
    Int g = 0;
    for (auto& v : f.coeffs()) g = gcd(g, v);
    return g;
}

IntPoly primitive_part(const IntPoly& f) {
    if (f.is_zero()) return f;
    Int c = content(f);
    if (f.lead() < 0) c = -c;
    std::vector<Int> v = f.coeffs();
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return IntPoly(std::move(v));
}

IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw DomainError("pseudo-remainder by zero");
    int db = b.degree();
    const Int& l = b.lead();
    std::vector<Int> r = a.coeffs();
    int e = std::max(a.degree() - db + 1, 0);
    int dr = static_cast<int>(r.size()) - 1;
    while (dr >= db) {
        Int s = r[dr];
        for (auto& x : r) x *= l;
        for (int j = 0; j <= db; ++j) r[dr - db + j] -= s * b.coeffs()[j];
        --e;
        while (dr >= 0 && r[dr] == 0) --dr;
        r.resize(dr + 1);
    }
    IntPoly out(std::move(r));
    if (e > 0) out *= ipow(l, e);
    return out;
}

bool divides(const IntPoly& b, const IntPoly& a, IntPoly* quotient) {
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    if (a.is_zero()) {
        if (quotient) *quotient = IntPoly();
        return true;
    }
    int db = b.degree();
    if (a.degree() < db) return false;
    std::vector<Int> r = a.coeffs();
    std::vector<Int> q(a.degree() - db + 1);
    const Int& l = b.lead();
    for (int i = a.degree(); i >= db; --i) {
        if (r[i] == 0) continue;
        if (!mpz_divisible_p(r[i].get_mpz_t(), l.get_mpz_t())) return false;
        Int t;
        mpz_divexact(t.get_mpz_t(), r[i].get_mpz_t(), l.get_mpz_t());
        q[i - db] = t;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= t * b.coeffs()[j];
    }
    for (int i = 0; i < db; ++i)
        if (r[i] != 0) return false;
    if (quotient) *quotient = IntPoly(std::move(q));
    return true;
}

IntPoly divexact(const IntPoly& a, const IntPoly& b) {
    IntPoly q;
    if (!divides(b, a, &q)) throw DomainError("inexact polynomial division");
    return q;
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    IntPoly x = primitive_part(a), y = primitive_part(b);
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        check_deadline();
        IntPoly r = primitive_part(pseudo_rem(x, y));
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

IntPoly compose_x_plus(const IntPoly& f, const Int& a) {
    // Horner in Z[X]: f(X + a)
    IntPoly r;
    IntPoly xa = IntPoly(std::vector<Int>{a, Int(1)});
    for (int i = f.degree(); i >= 0; --i) {
        r *= xa;
        r += IntPoly::constant(f.coeffs()[i]);
    }
    return r;
}

// ---------------------------------------------------------------- text format

namespace {

[[noreturn]] void parse_fail(const std::string& text, size_t pos, const std::string& why) {
    std::ostringstream os;
    os << "cannot parse polynomial at position " << pos << ": " << why << " in \"" << text << "\"";
    throw DomainError(os.str());
}

IntPoly parse_coeff_list(const std::string& text, size_t start) {
    std::vector<Int> v;
    size_t i = start;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    if (i >= text.size()) parse_fail(text, i, "empty coefficient list");
    while (true) {
        skip();
        size_t b = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        size_t d = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == d) parse_fail(text, b, "expected integer");
        std::string tok = text.substr(b, i - b);
        if (tok[0] == '+') tok.erase(0, 1);
        v.emplace_back(tok);
        skip();
        if (i >= text.size()) break;
        if (text[i] != ',') parse_fail(text, i, "expected ','");
        ++i;
    }
    return IntPoly(std::move(v));
}

}  // namespace

IntPoly parse_poly(const std::string& text) {
    static const std::string kPrefix = "coeffs:";
    size_t lead = 0;
    while (lead < text.size() && std::isspace(static_cast<unsigned char>(text[lead]))) ++lead;
    if (text.compare(lead, kPrefix.size(), kPrefix) == 0) {
        IntPoly f = parse_coeff_list(text, lead + kPrefix.size());
        require_degree_guard(f);
        return f;
    }
    std::map<int, Int> acc;
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_uint = [&](std::string& out) {
        size_t b = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        out = text.substr(b, i - b);
        return i > b;
    };
    bool first = true;
    skip();
    if (i >= text.size()) parse_fail(text, i, "empty input");
    while (true) {
        skip();
        if (i >= text.size()) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            parse_fail(text, i, "expected '+' or '-'");
        }
        size_t term_start = i;
        std::string digits;
        bool has_coeff = read_uint(digits);
        skip();
        int power = 0;
        bool has_x = false;
        if (i < text.size() && text[i] == 'X') {
            has_x = true;
            ++i;
            power = 1;
            skip();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip();
                std::string e;
                size_t epos = i;
                if (!read_uint(e)) parse_fail(text, epos, "expected exponent");
                if (e.size() > 4 || std::stoi(e) > kMaxDegree)
                    parse_fail(text, epos, "exponent exceeds degree guard " + std::to_string(kMaxDegree));
                power = std::stoi(e);
            }
        }
        if (!has_coeff && !has_x) parse_fail(text, term_start, "expected term");
        Int c = has_coeff ? Int(digits) : Int(1);
        acc[power] += sign * c;
        first = false;
    }
    std::vector<Int> v;
    for (auto& [k, c] : acc) {
        if (static_cast<int>(v.size()) <= k) v.resize(k + 1);
        v[k] += c;
    }
    return IntPoly(std::move(v));
}

namespace {

template <class C>
std::string render(const std::vector<C>& c, bool paren_coeffs) {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) {
        if (c[k] == 0) continue;
        bool neg = sgn(c[k]) < 0;
        C mag = abs(c[k]);
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (k == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) {
            std::string s = mag.get_str();
            if (paren_coeffs && s.find('/') != std::string::npos)
                os << '(' << s << ')';
            else
                os << s;
        }
        os << 'X';
        if (k > 1) os << '^' << k;
    }
    return os.str();
}

}  // namespace

std::string to_string(const IntPoly& f) { return render(f.coeffs(), false); }
std::string to_string(const RatPoly& f) { return render(f.coeffs(), true); }

void require_degree_guard(const IntPoly& f) {
    if (f.degree() > kMaxDegree)
        throw DomainError("degree " + std::to_string(f.degree()) + " exceeds guard " + std::to_string(kMaxDegree));
}

// ---------------------------------------------------------------- star involution

RatPoly star(const IntPoly& f) {
    if (!f.is_monic()) throw DomainError("star: polynomial is not monic");
    if (f.coeffs()[0] == 0) throw DomainError("star: F(0) = 0");
    const Int& c0 = f.coeffs()[0];
    std::vector<Rat> v;
    for (int i = f.degree(); i >= 0; --i) v.push_back(Rat(f.coeffs()[i], c0));
    for (auto& x : v) x.canonicalize();
    return RatPoly(std::move(v));
}

Symmetry classify_symmetry(const IntPoly& f) {
    RatPoly s = star(f);
    if (!(s == RatPoly(f))) return Symmetry::none;
    return f.coeffs()[0] == 1 ? Symmetry::plus : Symmetry::minus;
}

const char* to_string(Symmetry s) {
    switch (s) {
        case Symmetry::plus: return "plus_symmetric";
        case Symmetry::minus: return "minus_symmetric";
        default: return "non_symmetric";
    }
}

bool is_star_symmetric(const IntPoly& f) {
    if (!f.is_monic() || f.coeffs()[0] == 0) return false;
    return classify_symmetry(f) != Symmetry::none;
}

// ---------------------------------------------------------------- trace polynomial

IntPoly symmetric_lift(const IntPoly& h) {
    // X^n h(X + 1/X) = sum_k h_k (X^2 + 1)^k X^{n-k}
    int n = h.degree();
    if (n < 0) return IntPoly();
    IntPoly q{1, 0, 1};
    IntPoly r;
    IntPoly qk = IntPoly::constant(1);
    for (int k = 0; k <= n; ++k) {
        if (h.coeffs()[k] != 0) {
            IntPoly term = qk * IntPoly::monomial(h.coeffs()[k], n - k);
            r += term;
        }
        qk *= q;
    }
    return r;
}

IntPoly trace_polynomial(const IntPoly& f) {
    if (f.degree() < 0 || f.degree() % 2 != 0)
        throw DomainError("trace_polynomial: degree must be even");
    if (classify_symmetry(f) != Symmetry::plus)
        throw DomainError("trace_polynomial: polynomial is not +1-symmetric");
    int n = f.degree() / 2;
    // Binomial table C(k, j) for k <= n.
    std::vector<std::vector<Int>> C(n + 1);
    for (int k = 0; k <= n; ++k) {
        C[k].assign(k + 1, Int(1));
        for (int j = 1; j < k; ++j) C[k][j] = C[k - 1][j - 1] + C[k - 1][j];
    }
    // Coefficient of X^{n+k} in f equals sum over k' >= k, k' = k mod 2, of h_{k'} C(k', (k'-k)/2).
    std::vector<Int> h(n + 1);
    for (int k = n; k >= 0; --k) {
        Int v = f.coeffs()[n + k];
        for (int kp = k + 2; kp <= n; kp += 2) v -= h[kp] * C[kp][(kp - k) / 2];
        h[k] = v;
    }
    IntPoly out(std::move(h));
    if (symmetric_lift(out) != f) throw InternalError("trace_polynomial: re-expansion check failed");
    return out;
}

// ---------------------------------------------------------------- resultants

Int resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) throw DomainError("resultant of the zero polynomial");
    // Subresultant algorithm over Z on primitive parts with positive leading coefficients.
    Int sa = content(f), sb = content(g);
    if (sgn(f.lead()) < 0) sa = -sa;
    if (sgn(g.lead()) < 0) sb = -sb;
    IntPoly A = primitive_part(f), B = primitive_part(g);
    int degA = A.degree(), degB = B.degree();
    Int t = ipow(sa, degB) * ipow(sb, degA);
    int s = 1;
    if (degA < degB) {
        std::swap(A, B);
        std::swap(degA, degB);
        if ((degA & 1) && (degB & 1)) s = -1;
    }
    if (degB == 0) return s * t * ipow(B.lead(), degA);
    Int gg = 1, h = 1;
    while (true) {
        check_deadline();
        int delta = A.degree() - B.degree();
        if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
        IntPoly R = pseudo_rem(A, B);
        A = std::move(B);
        if (R.is_zero()) return 0;
        Int div = gg * ipow(h, delta);
        std::vector<Int> rc = R.coeffs();
        for (auto& x : rc) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), div.get_mpz_t());
        B = IntPoly(std::move(rc));
        gg = A.lead();
        if (delta == 0) {
            // h unchanged: h^{1-0} g^0
        } else {
            Int num = ipow(gg, delta);
            Int den = ipow(h, delta - 1);
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        if (B.degree() == 0) {
            int da = A.degree();
            Int num = ipow(B.lead(), da);
            Int hh;
            if (da >= 1) {
                Int den = ipow(h, da - 1);
                mpz_divexact(hh.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            } else {
                hh = num * h;
            }
            return s * t * hh;
        }
    }
}

Int discriminant(const IntPoly& f) {
    int n = f.degree();
    if (n < 1) throw DomainError("discriminant of a constant");
    Int r = resultant(f, derivative(f));
    if (((n * (n - 1)) / 2) % 2) r = -r;
    return r / f.lead();
}

// ---------------------------------------------------------------- Sturm sequences

namespace {

int sign_at(const IntPoly& p, const Rat& x) { return sgn(p.eval(x)); }

std::vector<IntPoly> sturm_chain(const IntPoly& h) {
    std::vector<IntPoly> chain{primitive_part(h), primitive_part(derivative(h))};
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        check_deadline();
        const IntPoly& a = chain[chain.size() - 2];
        const IntPoly& b = chain.back();
        // lc(b)^k a = q b + r; the multiplier's sign decides the sign of r.
        IntPoly r = pseudo_rem(a, b);
        int k = std::max(a.degree() - b.degree() + 1, 0);
        if (sgn(b.lead()) < 0 && (k & 1)) r = -r;
        if (r.is_zero()) break;
        Int c = content(r);
        std::vector<Int> v = r.coeffs();
        for (auto& x : v) {
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
            x = -x;
        }
        chain.emplace_back(std::move(v));
    }
    return chain;
}

int variations(const std::vector<IntPoly>& chain, const Rat& x) {
    int last = 0, v = 0;
    for (auto& p : chain) {
        int s = sign_at(p, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

}  // namespace

int sturm_count(const IntPoly& h, const Rat& a, const Rat& b) {
    if (h.degree() < 1) return 0;
    if (!(a < b)) throw DomainError("sturm_count: empty interval");
    if (h.eval(a) == 0 || h.eval(b) == 0) throw DomainError("sturm_count: endpoint is a root");
    auto chain = sturm_chain(h);
    return variations(chain, a) - variations(chain, b);
}

std::vector<std::pair<Rat, Rat>> isolate_roots(const IntPoly& h, const Rat& a, const Rat& b) {
    std::vector<std::pair<Rat, Rat>> out;
    if (h.degree() < 1) return out;
    auto chain = sturm_chain(h);
    auto count = [&](const Rat& lo, const Rat& hi) { return variations(chain, lo) - variations(chain, hi); };
    std::vector<std::pair<Rat, Rat>> stack{{a, b}};
    while (!stack.empty()) {
        check_deadline();
        auto [lo, hi] = stack.back();
        stack.pop_back();
        int c = count(lo, hi);
        if (c == 0) continue;
        if (c == 1) {
            out.emplace_back(lo, hi);
            continue;
        }
        Rat mid = (lo + hi) / 2;
        // Avoid landing exactly on a root.
        for (int k = 3; h.eval(mid) == 0; ++k) mid = lo + (hi - lo) / k;
        stack.emplace_back(mid, hi);
        stack.emplace_back(lo, mid);
    }
    std::sort(out.begin(), out.end(), [](auto& x, auto& y) { return x.first < y.first; });
    return out;
}

Int cauchy_bound(const IntPoly& h) {
    Int m = 0;
    for (auto& c : h.coeffs()) m = std::max(m, Int(abs(c)));
    return m + 1;
}

// ---------------------------------------------------------------- symmetric decomposition

int e_sign(const IntPoly& p) {
    Int v = p.eval(Int(1)) * p.eval(Int(-1));
    if ((p.degree() / 2) % 2) v = -v;
    if (v == 0) throw InternalError("e_sign: P(1)P(-1) = 0");
    return sgn(v);
}

SymmetricDecomposition decompose(const IntPoly& f) {
    if (!is_star_symmetric(f)) throw DomainError("decompose: polynomial is not *-symmetric: " + to_string(f));
    require_degree_guard(f);
    SymmetricDecomposition d;
    d.input = f;
    d.symmetry_sign = sgn(f.coeffs()[0]);
    auto fac = factor_over_Q(f);
    const IntPoly xm1{-1, 1}, xp1{1, 1};
    std::vector<Factor> others;
    for (auto& [q, m] : fac) {
        if (q == xm1)
            d.m_plus = m;
        else if (q == xp1)
            d.m_minus = m;
        else
            others.push_back({q, m});
    }
    for (size_t i = 0; i < others.size(); ++i) {
        const IntPoly& q = others[i].f;
        if (q.coeffs()[0] != 1 && q.coeffs()[0] != -1)
            throw InternalError("decompose: factor with non-unit constant term");
        RatPoly qs = star(q);
        if (qs == RatPoly(q)) {
            if (classify_symmetry(q) != Symmetry::plus || q.degree() % 2 != 0)
                throw InternalError("decompose: symmetric irreducible factor is not +1-symmetric of even degree");
            d.type1.push_back(others[i]);
            continue;
        }
        IntPoly qstar = qs.to_int();
        if (!(q < qstar)) continue;  // recorded from its partner
        auto it = std::find_if(others.begin(), others.end(), [&](const Factor& x) { return x.f == qstar; });
        if (it == others.end()) throw InternalError("decompose: missing partner g* for " + to_string(q));
        if (it->mult != others[i].mult) throw InternalError("decompose: unequal multiplicities in a g g* pair");
        d.type2.push_back({q, qstar, others[i].mult});
    }
    if (d.symmetry_sign < 0 && d.m_plus % 2 == 0)
        throw InternalError("decompose: -1-symmetric polynomial without an odd power of X - 1");
    d.f12 = divexact(f, pow(xm1, d.m_plus) * pow(xp1, d.m_minus));
    return d;
}

CircleProfile circle_profile(const SymmetricDecomposition& d) {
    CircleProfile cp;
    int circle = 0;
    for (auto& [f, m] : d.type1) {
        IntPoly h = trace_polynomial(f);
        if (h.eval(Int(2)) == 0 || h.eval(Int(-2)) == 0) throw InternalError("circle_profile: trace polynomial vanishes at +-2");
        auto iv = isolate_roots(h, Rat(-2), Rat(2));
        cp.pairs.push_back(static_cast<int>(iv.size()));
        cp.traces.push_back(std::move(iv));
        circle += m * cp.pairs.back();
    }
    cp.N = 2 * circle;
    int rest = d.input.degree() - d.m_plus - d.m_minus - cp.N;
    if (rest < 0 || rest % 2) throw InternalError("circle_profile: inconsistent root counts");
    cp.mF = rest / 2;
    cp.eF12 = d.f12.degree() == 0 ? 1 : e_sign(d.f12);
    if (d.f12.degree() > 0 && ((cp.N - (1 - cp.eF12)) % 4 + 4) % 4 != 0)
        throw InternalError("circle_profile: N is not congruent to 1 - e(F12) mod 4");
    return cp;
}

}  // namespace k3
