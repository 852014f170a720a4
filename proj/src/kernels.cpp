#include "k3/kernels.hpp"

#include "k3/cyclotomic.hpp"
#include "k3/errors.hpp"
#include "k3/padic.hpp"
#include "k3/parallel.hpp"

namespace k3 {

namespace {

using Mat = std::vector<std::vector<Int>>;

// Moves a row with nonzero entry in column k to position k; returns false if none.
bool pivot(Mat& m, std::size_t k, bool& negate) {
    if (m[k][k] != 0) return true;
    for (std::size_t r = k + 1; r < m.size(); ++r)
        if (m[r][k] != 0) {
            std::swap(m[k], m[r]);
            negate = !negate;
            return true;
        }
    return false;
}

void eliminate_row(Mat& m, std::size_t k, std::size_t i, const Int& prev) {
    std::size_t n = m.size();
    for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
    }
    m[i][k] = 0;
}

template <bool Omp>
Int bareiss(Mat m) {
    std::size_t n = m.size();
    for (auto& row : m)
        if (row.size() != n) throw DomainError("bareiss_det: matrix is not square");
    if (n == 0) return Int(1);
    bool negate = false;
    Int prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (!pivot(m, k, negate)) return Int(0);
        long lo = static_cast<long>(k + 1), hi = static_cast<long>(n);
        if constexpr (Omp) {
#pragma omp parallel for schedule(static) if (hi - lo > 8)
            for (long i = lo; i < hi; ++i) eliminate_row(m, k, static_cast<std::size_t>(i), prev);
        } else {
            for (long i = lo; i < hi; ++i) eliminate_row(m, k, static_cast<std::size_t>(i), prev);
        }
        prev = m[k][k];
    }
    Int d = m[n - 1][n - 1];
    return negate ? Int(-d) : d;
}

template <class For>
std::vector<ApostolRow> apostol_sweep(uint64_t max_n, For&& run) {
    std::vector<ApostolRow> rows;
    for (uint64_t n = 2; n <= max_n; ++n)
        for (uint64_t n2 = 1; n2 < n; ++n2) rows.push_back({n, n2, Int(0), Int(0)});
    run(rows.size(), [&](std::size_t i) {
        auto& r = rows[i];
        r.closed_form = apostol_resultant(r.n, r.n2);
        r.determinant = sylvester_resultant_serial(cyclotomic(r.n), cyclotomic(r.n2));
    });
    return rows;
}

template <class For>
std::vector<PiRow> pi_sweep(const std::vector<uint64_t>& ls, For&& run) {
    std::vector<PiRow> rows;
    for (std::size_t i = 0; i < ls.size(); ++i)
        for (std::size_t j = i + 1; j < ls.size(); ++j) rows.push_back({ls[i], ls[j], {}, {}});
    run(rows.size(), [&](std::size_t i) {
        auto& r = rows[i];
        r.closed_form = pi_cyclo(r.n, r.n2);
        for (auto& pp : pi_set(cyclotomic(r.n), cyclotomic(r.n2)).primes) r.engine.push_back(pp.p);
    });
    return rows;
}

auto serial = [](std::size_t n, auto&& fn) { serial_for(n, fn); };
auto omp = [](std::size_t n, auto&& fn) { parallel_for(n, fn); };

}  // namespace

Mat sylvester_matrix(const IntPoly& f, const IntPoly& g) {
    if (f.degree() < 1 || g.degree() < 1) throw DomainError("sylvester_matrix: degrees must be positive");
    std::size_t a = static_cast<std::size_t>(f.degree()), b = static_cast<std::size_t>(g.degree());
    Mat m(a + b, std::vector<Int>(a + b, Int(0)));
    for (std::size_t r = 0; r < b; ++r)
        for (std::size_t j = 0; j <= a; ++j) m[r][r + j] = f.coeff(static_cast<int>(a - j));
    for (std::size_t r = 0; r < a; ++r)
        for (std::size_t j = 0; j <= b; ++j) m[b + r][r + j] = g.coeff(static_cast<int>(b - j));
    return m;
}

Int bareiss_det_serial(Mat m) { return bareiss<false>(std::move(m)); }
Int bareiss_det_omp(Mat m) { return bareiss<true>(std::move(m)); }

Int sylvester_resultant_serial(const IntPoly& f, const IntPoly& g) {
    return bareiss_det_serial(sylvester_matrix(f, g));
}
Int sylvester_resultant_omp(const IntPoly& f, const IntPoly& g) { return bareiss_det_omp(sylvester_matrix(f, g)); }

std::vector<ApostolRow> apostol_sweep_serial(uint64_t max_n) { return apostol_sweep(max_n, serial); }
std::vector<ApostolRow> apostol_sweep_omp(uint64_t max_n) { return apostol_sweep(max_n, omp); }

std::vector<PiRow> pi_sweep_serial(const std::vector<uint64_t>& ls) { return pi_sweep(ls, serial); }
std::vector<PiRow> pi_sweep_omp(const std::vector<uint64_t>& ls) { return pi_sweep(ls, omp); }

}  // namespace k3
