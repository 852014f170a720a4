#include "k3/linalg.hpp"

#include "k3/deadline.hpp"
#include "k3/errors.hpp"

namespace k3 {

namespace {
uint64_t subm(uint64_t a, uint64_t b, uint64_t p) { return a >= b ? a - b : a + (p - b); }
}  // namespace

Echelon echelon_mod_p(FpMat rows, uint64_t p) {
    Echelon e;
    if (rows.empty()) return e;
    size_t cols = rows[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows.size(); ++c) {
        size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        uint64_t inv = invmod(rows[r][c], p);
        for (auto& x : rows[r]) x = mulmod(x, inv, p);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            uint64_t k = rows[i][c];
            for (size_t j = 0; j < cols; ++j) rows[i][j] = subm(rows[i][j], mulmod(k, rows[r][j], p), p);
        }
        e.pivots.push_back(static_cast<int>(c));
        ++r;
    }
    rows.resize(r);
    e.rows = std::move(rows);
    return e;
}

FpMat nullspace_mod_p(const FpMat& A, size_t cols, uint64_t p) {
    Echelon e = echelon_mod_p(A, p);
    std::vector<int> is_pivot(cols, -1);
    for (size_t i = 0; i < e.pivots.size(); ++i) is_pivot[e.pivots[i]] = static_cast<int>(i);
    FpMat basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free] >= 0) continue;
        FpVec v(cols, 0);
        v[free] = 1;
        for (size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = subm(0, e.rows[i][free], p);
        basis.push_back(std::move(v));
    }
    return basis;
}

size_t rank_mod_p(const FpMat& rows, uint64_t p) { return echelon_mod_p(rows, p).pivots.size(); }

IntVec charpoly_mod(const IntMat& A, const Int& m) {
    // Berkowitz: p_k = T_k p_{k-1} with Toeplitz T_k built from the bordering row and column.
    size_t n = A.size();
    auto red = [&](Int& x) { mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()); };
    IntVec p{Int(1)};  // descending
    for (size_t k = 1; k <= n; ++k) {
        check_deadline();
        size_t s = k - 1;
        IntVec col{Int(1), Int(-A[s][s])};
        red(col[1]);
        IntVec v(s);
        for (size_t i = 0; i < s; ++i) v[i] = A[i][s];
        for (size_t j = 0; j + 1 < k; ++j) {
            Int dot = 0;
            for (size_t i = 0; i < s; ++i) dot += A[s][i] * v[i];
            dot = -dot;
            red(dot);
            col.push_back(dot);
            IntVec w(s);
            for (size_t i = 0; i < s; ++i) {
                Int acc = 0;
                for (size_t l = 0; l < s; ++l) acc += A[i][l] * v[l];
                red(acc);
                w[i] = acc;
            }
            v = std::move(w);
        }
        IntVec np(k + 1);
        for (size_t i = 0; i <= k; ++i) {
            Int acc = 0;
            for (size_t j = 0; j < p.size() && j <= i; ++j) acc += col[i - j] * p[j];
            red(acc);
            np[i] = acc;
        }
        p = std::move(np);
    }
    return IntVec(p.rbegin(), p.rend());
}

IntMat hnf_mod(const std::vector<IntVec>& gens, size_t n, const Int& D) {
    std::vector<IntVec> work;
    for (auto g : gens) {
        for (auto& x : g) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), D.get_mpz_t());
        work.push_back(std::move(g));
    }
    IntMat basis(n);  // basis[i] is the column with pivot in row i
    for (size_t ii = n; ii-- > 0;) {
        IntVec cur(n, Int(0));
        cur[ii] = D;
        for (auto& w : work) {
            if (w[ii] == 0) continue;
            Int g, u, v;
            mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), cur[ii].get_mpz_t(), w[ii].get_mpz_t());
            Int a = cur[ii] / g, b = w[ii] / g;
            IntVec nc(n), nw(n);
            for (size_t r = 0; r < n; ++r) {
                nc[r] = u * cur[r] + v * w[r];
                nw[r] = b * cur[r] - a * w[r];
            }
            for (size_t r = 0; r < ii; ++r) {
                mpz_fdiv_r(nc[r].get_mpz_t(), nc[r].get_mpz_t(), D.get_mpz_t());
                mpz_fdiv_r(nw[r].get_mpz_t(), nw[r].get_mpz_t(), D.get_mpz_t());
            }
            nw[ii] = 0;
            cur = std::move(nc);
            w = std::move(nw);
        }
        if (cur[ii] < 0) {
            for (auto& x : cur) x = -x;
        }
        basis[ii] = std::move(cur);
    }
    for (size_t j = 0; j < n; ++j) {
        for (size_t i = j; i-- > 0;) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), basis[j][i].get_mpz_t(), basis[i][i].get_mpz_t());
            if (q == 0) continue;
            for (size_t r = 0; r <= i; ++r) basis[j][r] -= q * basis[i][r];
        }
    }
    return basis;
}

}  // namespace k3
