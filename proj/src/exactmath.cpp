#include "arratlas/exactmath.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace arratlas {

Polynomial Polynomial::constant(BigInt c) {
    if (c == 0) return Polynomial{};
    std::vector<BigInt> cs;
    cs.push_back(std::move(c));
    return Polynomial(std::move(cs));
}

Polynomial Polynomial::identity() {
    return Polynomial(std::vector<BigInt>{BigInt(0), BigInt(1)});
}

BigInt Polynomial::coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<size_t>(k)];
}

BigInt Polynomial::leading_coefficient() const {
    return coeffs_.empty() ? BigInt(0) : coeffs_.back();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), other.coeffs_.size()), BigInt(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), other.coeffs_.size()), BigInt(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < other.coeffs_.size(); ++i) out[i] -= other.coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (is_zero() || other.is_zero()) return Polynomial{};
    std::vector<BigInt> out(coeffs_.size() + other.coeffs_.size() - 1, BigInt(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const BigInt& scalar) const {
    if (scalar == 0) return Polynomial{};
    std::vector<BigInt> out = coeffs_;
    for (auto& c : out) c *= scalar;
    return Polynomial(std::move(out));
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const BigInt& c = coeffs_[static_cast<size_t>(k)];
        if (c == 0) continue;
        BigInt a = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (k == 0 || a != 1) os << a.str();
        if (k >= 1) os << "t";
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

BigInt poly_eval(const Polynomial& p, const BigInt& t) {
    BigInt acc = 0;
    const auto& cs = p.coeffs();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Polynomial poly_shift(const Polynomial& p, const BigInt& c) {
    // Horner in the shifted variable: p(t-c) = (...((a_d)(t-c) + a_{d-1})(t-c) + ...).
    Polynomial acc;
    const Polynomial shifted_t(std::vector<BigInt>{BigInt(-c), BigInt(1)});
    const auto& cs = p.coeffs();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * shifted_t + Polynomial::constant(*it);
    return acc;
}

Polynomial poly_product_chain(const std::vector<BigInt>& roots) {
    Polynomial acc = Polynomial::constant(1);
    for (const auto& r : roots) acc = acc * Polynomial(std::vector<BigInt>{BigInt(-r), BigInt(1)});
    return acc;
}

Polynomial interpolate(const std::vector<std::pair<BigInt, BigInt>>& points) {
    const size_t m = points.size();
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            if (points[i].first == points[j].first)
                throw DuplicateAbscissa("interpolate: repeated abscissa " + points[i].first.str());

    // Newton divided differences over exact rationals.
    std::vector<BigRational> dd(m);
    for (size_t i = 0; i < m; ++i) dd[i] = BigRational(points[i].second);
    std::vector<BigRational> newton_coeffs;
    newton_coeffs.reserve(m);
    for (size_t level = 0; level < m; ++level) {
        if (level > 0) {
            for (size_t i = m - 1; i >= level; --i) {
                BigRational dx(points[i].first - points[i - level].first);
                dd[i] = (dd[i] - dd[i - 1]) / dx;
                if (i == level) break;
            }
        }
        newton_coeffs.push_back(dd[level]);
    }

    // Expand to the monomial basis.
    std::vector<BigRational> coeffs(m, BigRational(0));
    std::vector<BigRational> basis(m, BigRational(0));  // prod_{j<level} (t - x_j)
    basis[0] = 1;
    size_t basis_len = 1;
    for (size_t level = 0; level < m; ++level) {
        for (size_t k = 0; k < basis_len; ++k) coeffs[k] += newton_coeffs[level] * basis[k];
        if (level + 1 < m) {
            const BigRational x(points[level].first);
            for (size_t k = basis_len; k-- > 0;) {
                basis[k + 1] += basis[k];
                basis[k] *= -x;
            }
            ++basis_len;
        }
    }

    std::vector<BigInt> out(m, BigInt(0));
    for (size_t k = 0; k < m; ++k) {
        if (denominator(coeffs[k]) != 1)
            throw NonIntegerCoefficient("interpolate: coefficient of t^" + std::to_string(k) +
                                        " is " + coeffs[k].str());
        out[k] = numerator(coeffs[k]);
    }
    return Polynomial(std::move(out));
}

std::string polynomial_to_json(const Polynomial& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
    nlohmann::json out;
    out["coeffs"] = std::move(coeffs);
    return out.dump();
}

namespace {

size_t checked_series_size(int order) {
    if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
    return static_cast<size_t>(order) + 1;
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order) : coeffs_(checked_series_size(order), BigRational(0)) {}

TruncatedSeries::TruncatedSeries(int order, std::vector<BigRational> coeffs) : TruncatedSeries(order) {
    for (size_t k = 0; k < coeffs.size() && k < coeffs_.size(); ++k) coeffs_[k] = std::move(coeffs[k]);
}

TruncatedSeries TruncatedSeries::constant(int order, const BigRational& c) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::linear(int order, const BigRational& c) {
    TruncatedSeries s(order);
    if (order >= 1) s.coeffs_[1] = c;
    return s;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& other) const {
    TruncatedSeries out(*this);
    for (size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] += other.coeffs_.at(k);
    return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& other) const {
    TruncatedSeries out(*this);
    for (size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] -= other.coeffs_.at(k);
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
    return series_mul(*this, other);
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("series_mul: mismatched truncation orders");
    const int n = a.order();
    TruncatedSeries out(n);
    std::vector<BigRational> cs(static_cast<size_t>(n) + 1, BigRational(0));
    for (int i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j) cs[static_cast<size_t>(i + j)] += a[i] * b[j];
    }
    return TruncatedSeries(n, std::move(cs));
}

TruncatedSeries series_exp(const TruncatedSeries& s) {
    if (s[0] != 0)
        throw NonInvertibleSeries("series_exp: nonzero constant term (result would be transcendental)");
    const int n = s.order();
    // exp(s) = sum s^k / k!; s^k has valuation >= k, so the sum is finite.
    TruncatedSeries acc = TruncatedSeries::constant(n, BigRational(1));
    TruncatedSeries power = TruncatedSeries::constant(n, BigRational(1));
    BigInt kfact = 1;
    for (int k = 1; k <= n; ++k) {
        power = series_mul(power, s);
        kfact *= k;
        TruncatedSeries term = power;
        std::vector<BigRational> cs(term.coeffs());
        for (auto& c : cs) c /= BigRational(kfact);
        acc = acc + TruncatedSeries(n, std::move(cs));
    }
    return acc;
}

TruncatedSeries series_inv(const TruncatedSeries& s) {
    if (s[0] == 0) throw NonInvertibleSeries("series_inv: zero constant term");
    const int n = s.order();
    std::vector<BigRational> b(static_cast<size_t>(n) + 1, BigRational(0));
    b[0] = BigRational(1) / s[0];
    for (int k = 1; k <= n; ++k) {
        BigRational acc(0);
        for (int j = 1; j <= k; ++j) acc += s[j] * b[static_cast<size_t>(k - j)];
        b[static_cast<size_t>(k)] = -acc / s[0];
    }
    return TruncatedSeries(n, std::move(b));
}

TruncatedSeries series_pow(const TruncatedSeries& s, unsigned k) {
    TruncatedSeries acc = TruncatedSeries::constant(s.order(), BigRational(1));
    TruncatedSeries base = s;
    while (k > 0) {
        if (k & 1u) acc = series_mul(acc, base);
        k >>= 1u;
        if (k > 0) base = series_mul(base, base);
    }
    return acc;
}

}  // namespace arratlas
