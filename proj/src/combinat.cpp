#include "arratlas/combinat.hpp"

#include <stdexcept>

namespace arratlas {

void SequenceTable::grow_stirling(int n) {
    if (n < static_cast<int>(stirling_.size())) return;
    if (stirling_.empty()) stirling_.push_back({BigInt(1)});  // S(0,0)=1
    for (int m = static_cast<int>(stirling_.size()); m <= n; ++m) {
        std::vector<BigInt> row(static_cast<size_t>(m) + 1, BigInt(0));
        const auto& prev = stirling_[static_cast<size_t>(m - 1)];
        for (int k = 1; k <= m; ++k) {
            BigInt v = (k < m) ? BigInt(k) * prev[static_cast<size_t>(k)] : BigInt(0);
            v += prev[static_cast<size_t>(k - 1)];
            row[static_cast<size_t>(k)] = std::move(v);
        }
        stirling_.push_back(std::move(row));
    }
}

const BigInt& SequenceTable::stirling2(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("stirling2: negative argument");
    if (k > n) return zero_;
    grow_stirling(n);
    return stirling_[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

const BigInt& SequenceTable::factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    if (factorial_.empty()) factorial_.push_back(1);
    for (int m = static_cast<int>(factorial_.size()); m <= n; ++m)
        factorial_.push_back(factorial_.back() * m);
    return factorial_[static_cast<size_t>(n)];
}

const BigInt& SequenceTable::ordered_bell(int n) {
    if (n < 0) throw std::invalid_argument("ordered_bell: negative argument");
    for (int m = static_cast<int>(bell_.size()); m <= n; ++m) {
        BigInt acc = 0;
        for (int k = 0; k <= m; ++k) acc += factorial(k) * stirling2(m, k);
        bell_.push_back(std::move(acc));
    }
    return bell_[static_cast<size_t>(n)];
}

void SequenceTable::grow_eulerian(int n) {
    if (n < static_cast<int>(eulerian_.size())) return;
    if (eulerian_.empty()) eulerian_.push_back({BigInt(1)});  // A(0,0)=1 by convention
    for (int m = static_cast<int>(eulerian_.size()); m <= n; ++m) {
        std::vector<BigInt> row(static_cast<size_t>(m), BigInt(0));  // k = 0..m-1
        row[0] = 1;
        for (int k = 1; k < m; ++k) {
            const auto& prev = eulerian_[static_cast<size_t>(m - 1)];
            BigInt v = BigInt(m - k) * prev[static_cast<size_t>(k - 1)];
            if (k < static_cast<int>(prev.size()))
                v += BigInt(k + 1) * prev[static_cast<size_t>(k)];
            row[static_cast<size_t>(k)] = std::move(v);
        }
        eulerian_.push_back(std::move(row));
    }
}

BigInt SequenceTable::eulerian(int n, int k) {
    if (n < 0) throw std::invalid_argument("eulerian: negative n");
    if (k < 0) return 0;
    if (n == 0) return k == 0 ? BigInt(1) : BigInt(0);
    if (k >= n) return 0;
    grow_eulerian(n);
    return eulerian_[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

BigInt stirling2(int n, int k) {
    SequenceTable t;
    return t.stirling2(n, k);
}

BigInt ordered_bell(int n) {
    SequenceTable t;
    return t.ordered_bell(n);
}

BigInt eulerian(int n, int k) {
    SequenceTable t;
    return t.eulerian(n, k);
}

BigInt factorial(int n) {
    SequenceTable t;
    return t.factorial(n);
}

std::vector<BigInt> odd_cycle_counts(int k) {
    if (k < 0) throw std::invalid_argument("odd_cycle_counts: negative k");
    std::vector<BigInt> roots;
    for (int i = 1; i <= k; ++i) roots.emplace_back(2 * i - 1);
    const Polynomial p = poly_product_chain(roots);
    std::vector<BigInt> out(static_cast<size_t>(k) + 1);
    for (int j = 0; j <= k; ++j) {
        BigInt c = p.coefficient(j);
        out[static_cast<size_t>(j)] = c < 0 ? BigInt(-c) : c;
    }
    return out;
}

std::vector<BigInt> boxed_coeffs(int k) {
    if (k < 0) throw std::invalid_argument("boxed_coeffs: negative k");
    std::vector<BigInt> roots;
    for (int i = 1; i <= k; ++i) roots.emplace_back(2 * i + 1);
    const Polynomial p = poly_product_chain(roots);
    std::vector<BigInt> out(static_cast<size_t>(k) + 1);
    for (int j = 0; j <= k; ++j) out[static_cast<size_t>(j)] = p.coefficient(j);
    return out;
}

}  // namespace arratlas
