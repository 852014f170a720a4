#include "order.hpp"

#include <random>

#include "k3/deadline.hpp"
#include "k3/errors.hpp"
#include "k3/hensel.hpp"
#include "k3/linalg.hpp"

namespace k3::detail {

namespace {

// An order O containing Z[x], with basis w_j = B[j] / D in the power basis,
// B upper triangular, and integral structure constants T[j*n+k] = coords(w_j w_k).
struct Order {
    size_t n = 0;
    IntPoly q;
    Int D = 1;
    std::vector<IntVec> B;
    std::vector<IntVec> T;
};

IntVec poly_mul_mod(const IntVec& a, const IntVec& b, const IntPoly& q) {
    size_t n = q.degree();
    std::vector<Int> prod(2 * n - 1, Int(0));
    for (size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < n; ++j) prod[i + j] += a[i] * b[j];
    }
    const auto& qc = q.coeffs();
    for (size_t k = prod.size(); k-- > n;) {
        if (prod[k] == 0) continue;
        Int c = prod[k];
        for (size_t i = 0; i <= n; ++i) prod[k - n + i] -= c * qc[i];
    }
    prod.resize(n);
    return prod;
}

// Coordinates of v / D in the basis B (v an integer power-basis vector); must be integral.
IntVec coords(const Order& o, IntVec v) {
    size_t n = o.n;
    IntVec c(n);
    for (size_t j = n; j-- > 0;) {
        Rat t(v[j], o.B[j][j]);
        t.canonicalize();
        Int num = t.get_num(), den = t.get_den();
        // v is scaled by D/D: entries are already D * value, coordinates are integers
        if (den != 1) throw InternalError("order: non-integral coordinates");
        c[j] = num;
        for (size_t i = 0; i <= j; ++i) v[i] -= num * o.B[j][i];
    }
    return c;
}

void build_table(Order& o) {
    size_t n = o.n;
    o.T.assign(n * n, IntVec());
    for (size_t j = 0; j < n; ++j) {
        for (size_t k = j; k < n; ++k) {
            check_deadline();
            IntVec prod = poly_mul_mod(o.B[j], o.B[k], o.q);
            for (auto& x : prod) {
                if (!mpz_divisible_p(x.get_mpz_t(), o.D.get_mpz_t()))
                    throw InternalError("order: product not in the order");
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), o.D.get_mpz_t());
            }
            o.T[j * n + k] = coords(o, prod);
            o.T[k * n + j] = o.T[j * n + k];
        }
    }
}

Order initial_order(const IntPoly& q) {
    Order o;
    o.n = q.degree();
    o.q = q;
    o.B.assign(o.n, IntVec(o.n, Int(0)));
    for (size_t j = 0; j < o.n; ++j) o.B[j][j] = 1;
    build_table(o);
    return o;
}

// Arithmetic in O / mO with the structure constants.
IntVec mul(const Order& o, const IntVec& a, const IntVec& b, const Int& m) {
    size_t n = o.n;
    IntVec r(n, Int(0));
    for (size_t j = 0; j < n; ++j) {
        if (a[j] == 0) continue;
        for (size_t k = 0; k < n; ++k) {
            if (b[k] == 0) continue;
            Int c = a[j] * b[k];
            const IntVec& t = o.T[j * n + k];
            for (size_t l = 0; l < n; ++l) r[l] += c * t[l];
        }
    }
    for (auto& x : r) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

struct FpTable {
    size_t n;
    uint64_t p;
    std::vector<uint64_t> t;  // (j*n + k)*n + l
};

FpTable reduce_table(const Order& o, uint64_t p) {
    FpTable f{o.n, p, std::vector<uint64_t>(o.n * o.n * o.n)};
    Int P = from_u64(p);
    for (size_t jk = 0; jk < o.n * o.n; ++jk) {
        for (size_t l = 0; l < o.n; ++l) {
            Int r;
            mpz_fdiv_r(r.get_mpz_t(), o.T[jk][l].get_mpz_t(), P.get_mpz_t());
            f.t[jk * o.n + l] = to_u64(r);
        }
    }
    return f;
}

FpVec mul_p(const FpTable& t, const FpVec& a, const FpVec& b) {
    size_t n = t.n;
    uint64_t p = t.p;
    FpVec r(n, 0);
    for (size_t j = 0; j < n; ++j) {
        if (!a[j]) continue;
        for (size_t k = 0; k < n; ++k) {
            if (!b[k]) continue;
            uint64_t c = mulmod(a[j], b[k], p);
            const uint64_t* row = &t.t[(j * n + k) * n];
            for (size_t l = 0; l < n; ++l) {
                if (!row[l]) continue;
                uint64_t v = mulmod(c, row[l], p);
                r[l] = r[l] >= p - v ? r[l] - (p - v) : r[l] + v;
            }
        }
    }
    return r;
}

FpVec pow_p(const FpTable& t, FpVec a, Int e, const FpVec& one) {
    FpVec r = one;
    while (e > 0) {
        check_deadline();
        if (mpz_odd_p(e.get_mpz_t())) r = mul_p(t, r, a);
        e >>= 1;
        if (e > 0) a = mul_p(t, a, a);
    }
    return r;
}

FpVec to_fp(const IntVec& v, uint64_t p) {
    FpVec r(v.size());
    Int P = from_u64(p);
    for (size_t i = 0; i < v.size(); ++i) {
        Int x;
        mpz_fdiv_r(x.get_mpz_t(), v[i].get_mpz_t(), P.get_mpz_t());
        r[i] = to_u64(x);
    }
    return r;
}

IntVec to_int(const FpVec& v) {
    IntVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = from_u64(v[i]);
    return r;
}

IntVec unit_coords(const Order& o) {
    IntVec e(o.n, Int(0));
    e[0] = o.D;
    return coords(o, e);
}

IntVec x_coords(const Order& o) {
    IntVec e(o.n, Int(0));
    if (o.n > 1) e[1] = o.D;
    else e[0] = -o.q.coeffs()[0] * o.D;
    return coords(o, e);
}

// Basis of the p-radical of O / pO, in O coordinates.
Echelon radical(const Order& o, const FpTable& t) {
    size_t n = o.n;
    uint64_t p = t.p;
    FpMat A(n, FpVec(n, 0));
    if (p > n) {
        // For p > n the radical is the kernel of the trace form.
        std::vector<Int> tr(n, Int(0));
        for (size_t j = 0; j < n; ++j)
            for (size_t l = 0; l < n; ++l) tr[j] += o.T[j * n + l][l];
        Int P = from_u64(p);
        for (size_t j = 0; j < n; ++j) {
            for (size_t k = 0; k < n; ++k) {
                Int s = 0;
                for (size_t l = 0; l < n; ++l) s += o.T[j * n + k][l] * tr[l];
                mpz_fdiv_r(s.get_mpz_t(), s.get_mpz_t(), P.get_mpz_t());
                A[j][k] = to_u64(s);
            }
        }
    } else {
        Int q = from_u64(p);
        while (q < Int(static_cast<unsigned long>(n))) q *= p;
        FpVec one = to_fp(unit_coords(o), p);
        for (size_t i = 0; i < n; ++i) {
            FpVec ei(n, 0);
            ei[i] = 1;
            FpVec img = pow_p(t, ei, q, one);
            for (size_t l = 0; l < n; ++l) A[l][i] = img[l];
        }
    }
    return echelon_mod_p(nullspace_mod_p(A, n, p), p);
}

// Lattice basis of pO + span(rows) as integer O-coordinate vectors.
std::vector<IntVec> lattice_basis(const Echelon& e, size_t n, uint64_t p) {
    std::vector<IntVec> out;
    std::vector<bool> pivot(n, false);
    for (size_t k = 0; k < e.rows.size(); ++k) {
        out.push_back(to_int(e.rows[k]));
        pivot[e.pivots[k]] = true;
    }
    for (size_t i = 0; i < n; ++i) {
        if (pivot[i]) continue;
        IntVec v(n, Int(0));
        v[i] = from_u64(p);
        out.push_back(v);
    }
    return out;
}

// Coordinates of w (integer O-coordinates, w in pO + span(rows)) in lattice_basis order, mod p.
FpVec lattice_coords_mod_p(const Echelon& e, IntVec w, size_t n, uint64_t p) {
    FpVec out;
    std::vector<bool> pivot(n, false);
    for (size_t k = 0; k < e.rows.size(); ++k) {
        Int c = w[e.pivots[k]];
        for (size_t i = 0; i < n; ++i) w[i] -= c * from_u64(e.rows[k][i]);
        out.push_back(to_fp({c}, p)[0]);
        pivot[e.pivots[k]] = true;
    }
    Int P = from_u64(p);
    for (size_t i = 0; i < n; ++i) {
        if (pivot[i]) continue;
        if (!mpz_divisible_p(w[i].get_mpz_t(), P.get_mpz_t()))
            throw InternalError("order: element outside the radical");
        Int c = w[i] / P;
        out.push_back(to_fp({c}, p)[0]);
    }
    return out;
}

// One Pohst-Zassenhaus step; returns false when O is already p-maximal.
bool enlarge(Order& o, uint64_t p) {
    size_t n = o.n;
    FpTable t = reduce_table(o, p);
    Echelon rad = radical(o, t);
    if (rad.rows.empty()) return false;
    std::vector<IntVec> gam = lattice_basis(rad, n, p);
    // Matrix of alpha -> (alpha * gamma_k expressed in the gamma basis) mod p.
    FpMat A(n * n, FpVec(n, 0));
    for (size_t j = 0; j < n; ++j) {
        for (size_t k = 0; k < n; ++k) {
            check_deadline();
            IntVec w(n, Int(0));
            for (size_t l = 0; l < n; ++l) {
                if (gam[k][l] == 0) continue;
                const IntVec& tt = o.T[j * n + l];
                for (size_t i = 0; i < n; ++i) w[i] += gam[k][l] * tt[i];
            }
            FpVec c = lattice_coords_mod_p(rad, w, n, p);
            for (size_t i = 0; i < n; ++i) A[k * n + i][j] = c[i];
        }
    }
    FpMat U = nullspace_mod_p(A, n, p);
    if (U.empty()) return false;
    Int Dn = o.D * p;
    std::vector<IntVec> gens;
    for (size_t j = 0; j < n; ++j) {
        IntVec g(n);
        for (size_t i = 0; i < n; ++i) g[i] = o.B[j][i] * p;
        gens.push_back(g);
    }
    for (auto& u : U) {
        IntVec g(n, Int(0));
        for (size_t j = 0; j < n; ++j) {
            if (!u[j]) continue;
            Int c = from_u64(u[j]);
            for (size_t i = 0; i < n; ++i) g[i] += c * o.B[j][i];
        }
        gens.push_back(g);
    }
    IntMat H = hnf_mod(gens, n, Dn);
    // Remove common factors of p from the denominator.
    while (Dn > 1) {
        bool all = true;
        for (auto& col : H)
            for (auto& x : col) all = all && mpz_divisible_ui_p(x.get_mpz_t(), p);
        if (!all) break;
        for (auto& col : H)
            for (auto& x : col) mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), p);
        Dn /= p;
    }
    o.D = Dn;
    o.B = H;
    build_table(o);
    return true;
}

// Minimal polynomial of b inside the algebra with identity eps; ascending, monic.
std::vector<uint64_t> min_poly(const FpTable& t, const FpVec& eps, const FpVec& b) {
    uint64_t p = t.p;
    FpMat powers{eps};
    while (true) {
        check_deadline();
        powers.push_back(mul_p(t, powers.back(), b));
        size_t k = powers.size();
        FpMat A(t.n, FpVec(k, 0));
        for (size_t i = 0; i < t.n; ++i)
            for (size_t c = 0; c < k; ++c) A[i][c] = powers[c][i];
        FpMat ker = nullspace_mod_p(A, k, p);
        if (ker.empty()) continue;
        FpVec c = ker[0];
        uint64_t inv = invmod(c[k - 1], p);
        for (auto& x : c) x = mulmod(x, inv, p);
        return c;
    }
}

FpVec eval_in_algebra(const FpTable& t, const ModPoly& g, const FpVec& eps, const FpVec& b) {
    FpVec r(t.n, 0);
    uint64_t p = t.p;
    for (int i = g.degree(); i >= 0; --i) {
        r = mul_p(t, r, b);
        uint64_t c = g.coeff(i);
        for (size_t l = 0; l < t.n; ++l) r[l] = (r[l] + mulmod(c, eps[l], p)) % p;
    }
    return r;
}

size_t image_rank(const FpTable& t, const FpVec& eps, const FpMat& basis) {
    FpMat rows;
    for (auto& v : basis) rows.push_back(mul_p(t, eps, v));
    return rank_mod_p(rows, t.p);
}

struct Component {
    FpVec eps;
    int dim;
    int f;
};

std::vector<Component> local_idempotents(const Order& o, const FpTable& t, const Echelon& rad, uint64_t seed) {
    size_t n = o.n;
    uint64_t p = t.p;
    FpMat full;
    for (size_t i = 0; i < n; ++i) {
        FpVec e(n, 0);
        e[i] = 1;
        full.push_back(e);
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<uint64_t> coin(0, p - 1);
    std::vector<FpVec> queue{to_fp(unit_coords(o), p)};
    std::vector<Component> done;
    while (!queue.empty()) {
        FpVec eps = queue.back();
        queue.pop_back();
        int dim = static_cast<int>(image_rank(t, eps, full));
        int f = dim - static_cast<int>(image_rank(t, eps, rad.rows));
        bool settled = false;
        for (int attempt = 0; attempt < 400 && !settled; ++attempt) {
            FpVec r(n);
            for (auto& x : r) x = coin(rng);
            FpVec b = mul_p(t, eps, r);
            ModPoly mu(p, min_poly(t, eps, b));
            auto fac = factor_mod_p(mu, seed + attempt);
            if (fac.size() == 1) {
                if (fac[0].f.degree() == f) {
                    done.push_back({eps, dim, f});
                    settled = true;
                }
                continue;
            }
            for (size_t i = 0; i < fac.size(); ++i) {
                ModPoly pi = pow(fac[i].f, fac[i].mult);
                ModPoly rest = divexact(mu, pi);
                ModPoly s(p), tt(p);
                ext_gcd(rest, pi, s, tt);
                ModPoly ei = (s * rest) % mu;
                queue.push_back(eval_in_algebra(t, ei, eps, b));
            }
            settled = true;
        }
        if (!settled) throw Undecided("p-adic splitting did not converge", p);
    }
    return done;
}

}  // namespace

std::vector<LocalBlock> split_locally(const IntPoly& q, uint64_t p, int K, uint64_t seed) {
    size_t n = q.degree();
    Int pK = ipow(from_u64(p), K);
    if (n == 1) {
        LocalBlock b;
        b.approx = mod_reduce(q, pK);
        b.residue = reduce_mod_p(q, p);
        return {b};
    }
    Order o = initial_order(q);
    while (enlarge(o, p)) {
    }
    FpTable t = reduce_table(o, p);
    Echelon rad = radical(o, t);
    std::vector<Component> comps = local_idempotents(o, t, rad, seed);
    IntVec x = x_coords(o);
    std::vector<LocalBlock> out;
    for (auto& c : comps) {
        check_deadline();
        IntVec eps = to_int(c.eps);
        while (true) {
            IntVec e2 = mul(o, eps, eps, pK);
            if (e2 == eps) break;
            IntVec e3 = mul(o, e2, eps, pK);
            for (size_t i = 0; i < n; ++i) {
                eps[i] = 3 * e2[i] - 2 * e3[i];
                mpz_fdiv_r(eps[i].get_mpz_t(), eps[i].get_mpz_t(), pK.get_mpz_t());
            }
        }
        IntVec theta = mul(o, x, eps, pK);
        IntMat M(n, IntVec(n, Int(0)));
        for (size_t j = 0; j < n; ++j) {
            IntVec ej(n, Int(0));
            ej[j] = 1;
            IntVec col = mul(o, theta, ej, pK);
            for (size_t i = 0; i < n; ++i) M[i][j] = col[i];
        }
        IntVec cp = charpoly_mod(M, pK);
        size_t shift = n - c.dim;
        for (size_t i = 0; i < shift; ++i)
            if (cp[i] != 0) throw InternalError("p-adic splitting: characteristic polynomial not divisible");
        LocalBlock b;
        b.approx = IntPoly(IntVec(cp.begin() + shift, cp.end()));
        auto red = factor_mod_p(reduce_mod_p(b.approx, p), seed);
        if (red.size() != 1) throw InternalError("p-adic splitting: reduction is not a prime power");
        b.residue = red[0].f;
        b.exponent = red[0].mult;
        b.f = c.f;
        b.e = c.dim / c.f;
        if (b.e * b.f != c.dim) throw InternalError("p-adic splitting: inconsistent local degrees");
        out.push_back(b);
    }
    return out;
}

}  // namespace k3::detail
