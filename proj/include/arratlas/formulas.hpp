#ifndef ARRATLAS_FORMULAS_HPP
#define ARRATLAS_FORMULAS_HPP

#include "arratlas/exactmath.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace arratlas {

enum class FamilyId { Threshold, BoxedThreshold };

struct DomainTooSmall : std::runtime_error {
    explicit DomainTooSmall(const std::string& what) : std::runtime_error(what) {}
};

struct NonIntegerEGFCoefficient : std::runtime_error {
    explicit NonIntegerEGFCoefficient(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidEvaluationPoint : std::runtime_error {
    explicit InvalidEvaluationPoint(const std::string& what) : std::runtime_error(what) {}
};

/// chi of the threshold arrangement T_n:
///   sum_{k=1}^{n} (S(n,k) + n*S(n-1,k)) * (t-1)(t-3)...(t-(2k-1))
/// for n >= 2. n = 1 is special-cased to t (the empty arrangement on a
/// line), where the sum above degenerates.
Polynomial chi_threshold(int n);

/// chi of the boxed threshold arrangement BT_n, via the shift law
/// chi_BT(t) = chi_T(t - 2).
Polynomial chi_boxed_threshold(int n);

/// Coefficient of t^j in the family's chi, assembled from the a(k,j) /
/// b(k,j) coefficient tables instead of polynomial expansion. For the
/// threshold family the table stores absolute values, so each term carries
/// the sign (-1)^(k-j); the boxed table is already signed.
BigInt chi_coefficient(FamilyId family, int n, int j);

/// r(BT_n) = 4 a(n) + sum_{k=1}^n 4 (k! - (k-1)!)(k S(n,k) - n S(n-1,k-1)),
/// n >= 2. Throws DomainTooSmall below that (BT_0 and BT_1 have 1 and 3
/// regions, but the formula does not produce those values).
BigInt regions_boxed(int n);

/// r(T_n) = 2 (a(n) - n a(n-1)) for n >= 2; r(T_0) = r(T_1) = 1 by
/// convention (empty arrangements).
BigInt regions_threshold(int n);

/// r(T_n) = sum_{k=1}^{n-1} 2^k (n-k) A(n-1, k-1), n >= 2.
BigInt regions_threshold_eulerian(int n);

/// Coefficients of e^{2x}(1-x)/(2-e^x)^2 scaled by n!: the list
/// r(BT_0), ..., r(BT_n_max). Exact rational series arithmetic with a final
/// integrality check.
std::vector<BigInt> regions_boxed_via_egf(int n_max);

/// Coefficients of (1+x)(2e^x-1)^((t-3)/2) scaled by n!: the list
/// chi_BT_0(t), ..., chi_BT_n_max(t). Requires odd t >= 3 so the exponent
/// is a nonnegative integer.
std::vector<BigInt> chi_boxed_via_egf(int t, int n_max);

}  // namespace arratlas

#endif  // ARRATLAS_FORMULAS_HPP
