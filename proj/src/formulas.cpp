#include "arratlas/formulas.hpp"

#include "arratlas/combinat.hpp"

#include <algorithm>

namespace arratlas {

namespace {

// S(n,k) + n*S(n-1,k), the weight shared by chi, its coefficient formulas
// and the region counts.
BigInt partition_weight(SequenceTable& t, int n, int k) {
    return t.stirling2(n, k) + BigInt(n) * t.stirling2(n - 1, k);
}

}  // namespace

Polynomial chi_threshold(int n) {
    if (n < 1) throw DomainTooSmall("chi_threshold: need n >= 1");
    if (n == 1) return Polynomial::identity();
    SequenceTable tbl;
    Polynomial acc;
    Polynomial chain = Polynomial::constant(1);
    for (int k = 1; k <= n; ++k) {
        chain = chain * Polynomial(std::vector<BigInt>{BigInt(-(2 * k - 1)), BigInt(1)});
        acc = acc + chain * partition_weight(tbl, n, k);
    }
    return acc;
}

Polynomial chi_boxed_threshold(int n) {
    return poly_shift(chi_threshold(n), BigInt(2));
}

BigInt chi_coefficient(FamilyId family, int n, int j) {
    if (n < 1 || j < 0 || j > n) throw std::invalid_argument("chi_coefficient: need n >= 1, 0 <= j <= n");
    if (n == 1) {
        const Polynomial p = family == FamilyId::Threshold ? chi_threshold(1) : chi_boxed_threshold(1);
        return p.coefficient(j);
    }
    SequenceTable tbl;
    BigInt acc = 0;
    if (family == FamilyId::Threshold) {
        for (int k = std::max(j, 1); k <= n; ++k) {
            const BigInt a = odd_cycle_counts(k)[static_cast<size_t>(j)];
            const BigInt term = partition_weight(tbl, n, k) * a;
            acc += ((k - j) % 2 == 0) ? term : -term;
        }
    } else {
        for (int k = std::max(j, 1); k <= n; ++k)
            acc += partition_weight(tbl, n, k) * boxed_coeffs(k)[static_cast<size_t>(j)];
    }
    return acc;
}

BigInt regions_boxed(int n) {
    if (n < 2) throw DomainTooSmall("regions_boxed: formula valid for n >= 2 only");
    SequenceTable t;
    BigInt acc = BigInt(4) * t.ordered_bell(n);
    for (int k = 1; k <= n; ++k) {
        const BigInt fac_gap = t.factorial(k) - t.factorial(k - 1);
        const BigInt part = BigInt(k) * t.stirling2(n, k) - BigInt(n) * t.stirling2(n - 1, k - 1);
        acc += BigInt(4) * fac_gap * part;
    }
    return acc;
}

BigInt regions_threshold(int n) {
    if (n < 0) throw std::invalid_argument("regions_threshold: negative n");
    if (n < 2) return 1;  // empty arrangements
    SequenceTable t;
    return BigInt(2) * (t.ordered_bell(n) - BigInt(n) * t.ordered_bell(n - 1));
}

BigInt regions_threshold_eulerian(int n) {
    if (n < 2) throw DomainTooSmall("regions_threshold_eulerian: need n >= 2");
    SequenceTable t;
    BigInt acc = 0;
    BigInt pow2 = 1;
    for (int k = 1; k <= n - 1; ++k) {
        pow2 *= 2;
        acc += pow2 * BigInt(n - k) * t.eulerian(n - 1, k - 1);
    }
    return acc;
}

namespace {

std::vector<BigInt> scale_by_factorials(const TruncatedSeries& s, const char* what) {
    SequenceTable t;
    std::vector<BigInt> out;
    out.reserve(static_cast<size_t>(s.order()) + 1);
    for (int k = 0; k <= s.order(); ++k) {
        const BigRational v = s[k] * BigRational(t.factorial(k));
        if (denominator(v) != 1)
            throw NonIntegerEGFCoefficient(std::string(what) + ": coefficient of x^" +
                                           std::to_string(k) + " scaled by k! is " + v.str());
        out.push_back(numerator(v));
    }
    return out;
}

}  // namespace

std::vector<BigInt> regions_boxed_via_egf(int n_max) {
    if (n_max < 0) throw std::invalid_argument("regions_boxed_via_egf: negative order");
    const int N = n_max;
    const TruncatedSeries x = TruncatedSeries::linear(N, BigRational(1));
    const TruncatedSeries one = TruncatedSeries::constant(N, BigRational(1));
    const TruncatedSeries e2x = series_exp(TruncatedSeries::linear(N, BigRational(2)));
    const TruncatedSeries two_minus_ex = TruncatedSeries::constant(N, BigRational(2)) - series_exp(x);
    const TruncatedSeries egf =
        series_mul(series_mul(e2x, one - x), series_inv(series_mul(two_minus_ex, two_minus_ex)));
    return scale_by_factorials(egf, "regions_boxed_via_egf");
}

std::vector<BigInt> chi_boxed_via_egf(int t, int n_max) {
    if (t < 3 || t % 2 == 0)
        throw InvalidEvaluationPoint("chi_boxed_via_egf: t must be odd and >= 3");
    if (n_max < 0) throw std::invalid_argument("chi_boxed_via_egf: negative order");
    const int N = n_max;
    const unsigned exponent = static_cast<unsigned>((t - 3) / 2);
    const TruncatedSeries x = TruncatedSeries::linear(N, BigRational(1));
    const TruncatedSeries one = TruncatedSeries::constant(N, BigRational(1));
    const TruncatedSeries base =
        series_exp(x) * TruncatedSeries::constant(N, BigRational(2)) - one;
    const TruncatedSeries egf = series_mul(one + x, series_pow(base, exponent));
    return scale_by_factorials(egf, "chi_boxed_via_egf");
}

}  // namespace arratlas
