#ifndef ARRATLAS_EXACTMATH_HPP
#define ARRATLAS_EXACTMATH_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace arratlas {

// All counting in this library is exact. BigInt/BigRational are the only
// numeric types that ever hold a result; there is no floating point anywhere.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

struct DuplicateAbscissa : std::runtime_error {
    explicit DuplicateAbscissa(const std::string& what) : std::runtime_error(what) {}
};

// Interpolation or an EGF expansion produced a non-integer where an integer
// count was required. This always indicates a bug upstream, never a rounding
// issue, so it is loud.
struct NonIntegerCoefficient : std::runtime_error {
    explicit NonIntegerCoefficient(const std::string& what) : std::runtime_error(what) {}
};

struct NonInvertibleSeries : std::runtime_error {
    explicit NonInvertibleSeries(const std::string& what) : std::runtime_error(what) {}
};

/// Dense univariate polynomial with exact integer coefficients, ascending
/// degree, no trailing zeros. The zero polynomial has an empty coefficient
/// list and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial zero() { return Polynomial{}; }
    static Polynomial constant(BigInt c);
    /// The monomial t (handy as a building block).
    static Polynomial identity();

    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    BigInt coefficient(int k) const;
    BigInt leading_coefficient() const;

    bool operator==(const Polynomial& other) const = default;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(const BigInt& scalar) const;

    std::string to_string() const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// Exact Horner evaluation.
BigInt poly_eval(const Polynomial& p, const BigInt& t);

/// Returns q with q(t) = p(t - c).
Polynomial poly_shift(const Polynomial& p, const BigInt& c);

/// Product of (t - r) over the given roots; the empty product is 1.
Polynomial poly_product_chain(const std::vector<BigInt>& roots);

/// Unique polynomial of degree < points.size() through all points, computed
/// over exact rationals (Newton form). Throws DuplicateAbscissa on repeated
/// x-values and NonIntegerCoefficient if the result is not an integer
/// polynomial -- the latter signals that the sampled values cannot come from
/// an integer-valued polynomial, i.e. a counting bug.
Polynomial interpolate(const std::vector<std::pair<BigInt, BigInt>>& points);

/// {"coeffs": ["6", "-5", "1"]} -- ascending degree, decimal strings so
/// consumers never overflow.
std::string polynomial_to_json(const Polynomial& p);

/// Power series truncated at a fixed order N: coefficient of x^k lives at
/// index k, 0 <= k <= N. All arithmetic stays at the construction order.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);
    TruncatedSeries(int order, std::vector<BigRational> coeffs);

    static TruncatedSeries constant(int order, const BigRational& c);
    /// c * x^1, truncated.
    static TruncatedSeries linear(int order, const BigRational& c);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BigRational& operator[](int k) const { return coeffs_.at(static_cast<size_t>(k)); }
    const std::vector<BigRational>& coeffs() const { return coeffs_; }

    bool operator==(const TruncatedSeries& other) const = default;

    TruncatedSeries operator+(const TruncatedSeries& other) const;
    TruncatedSeries operator-(const TruncatedSeries& other) const;
    TruncatedSeries operator*(const TruncatedSeries& other) const;

private:
    std::vector<BigRational> coeffs_;  // size order+1
};

/// exp(s) for s with zero constant term (the only case expressible in exact
/// rationals). Throws NonInvertibleSeries otherwise.
TruncatedSeries series_exp(const TruncatedSeries& s);

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Multiplicative inverse; requires a nonzero constant term.
TruncatedSeries series_inv(const TruncatedSeries& s);

/// s^k for a nonnegative integer k; s^0 = 1.
TruncatedSeries series_pow(const TruncatedSeries& s, unsigned k);

}  // namespace arratlas

#endif  // ARRATLAS_EXACTMATH_HPP
