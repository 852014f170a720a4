#pragma once

#include <cstdint>
#include <vector>

#include "k3/bigint.hpp"
#include "k3/intpoly.hpp"

namespace k3 {

// Sylvester matrix of f and g (size deg f + deg g), rows of g shifted first-to-last after f.
std::vector<std::vector<Int>> sylvester_matrix(const IntPoly& f, const IntPoly& g);

// Exact determinant by Bareiss fraction-free elimination. The OpenMP variant
// eliminates the rows below each pivot concurrently.
Int bareiss_det_serial(std::vector<std::vector<Int>> m);
Int bareiss_det_omp(std::vector<std::vector<Int>> m);

Int sylvester_resultant_serial(const IntPoly& f, const IntPoly& g);
Int sylvester_resultant_omp(const IntPoly& f, const IntPoly& g);

struct ApostolRow {
    uint64_t n, n2;
    Int closed_form;
    Int determinant;
};
// Every pair 1 <= n2 < n <= max_n, ordered by (n, n2).
std::vector<ApostolRow> apostol_sweep_serial(uint64_t max_n);
std::vector<ApostolRow> apostol_sweep_omp(uint64_t max_n);

struct PiRow {
    uint64_t n, n2;
    std::vector<uint64_t> closed_form;  // pi_cyclo
    std::vector<uint64_t> engine;       // pi_set primes
};
// Every pair n < n2 drawn from `ls`, in input order.
std::vector<PiRow> pi_sweep_serial(const std::vector<uint64_t>& ls);
std::vector<PiRow> pi_sweep_omp(const std::vector<uint64_t>& ls);

}  // namespace k3
