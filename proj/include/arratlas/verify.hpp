#ifndef ARRATLAS_VERIFY_HPP
#define ARRATLAS_VERIFY_HPP

#include "arratlas/exactmath.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace arratlas {

struct CheckResult {
    std::string suite;
    std::string name;
    bool ok = false;
    std::string detail;  // expected/actual on failure, empty otherwise
};

/// A frozen row of the reference table of chi_BT_n: ascending coefficients
/// plus the region count, for 2 <= n <= 10.
struct ReferenceRow {
    int n;
    std::vector<BigInt> coeffs;
    BigInt regions;
};

const std::vector<ReferenceRow>& reference_table();

/// Closed-form chi and region counts against the frozen table, n = 2..n_max
/// (n_max <= 10).
std::vector<CheckResult> verify_table1(int n_max = 10);

/// char_poly(box(A)) == poly_shift(char_poly(A), 2) on `trials` random
/// sub-arrangements of the type-C universe per dimension 2..n_max.
std::vector<CheckResult> verify_shift(int n_max = 4, int trials = 20,
                                      std::uint64_t seed = 20240803, int jobs = 1);

/// Half-order and colored-graph pipelines against the brute-force region
/// sets of BT_n (and the threshold specializations against T_n), n = 2..n_max.
std::vector<CheckResult> verify_bijection(int n_max = 4, int jobs = 1);

/// chi_coefficient against expanded polynomials for both families, plus the
/// signed partial-sum relation between the b(k,j) and the coefficients of
/// the odd-root chain, up to n_max.
std::vector<CheckResult> verify_coefficients(int n_max = 8);

/// Both generating-function routes against the closed forms.
std::vector<CheckResult> verify_egf(int n_max = 8);

/// Eulerian-number identity against the ordered-Bell formula, n = 2..n_max.
std::vector<CheckResult> verify_eulerian(int n_max = 12);

}  // namespace arratlas

#endif  // ARRATLAS_VERIFY_HPP
