#ifndef ARRATLAS_COMBINAT_HPP
#define ARRATLAS_COMBINAT_HPP

#include "arratlas/exactmath.hpp"

#include <vector>

namespace arratlas {

/// Memoized tables for the combinatorial sequences used throughout: Stirling
/// numbers of the second kind, ordered Bell numbers, Eulerian numbers and
/// factorials. Values are produced by their defining recurrences only.
/// Growing a table is not thread-safe; a fully grown instance is immutable
/// and can be shared read-only.
class SequenceTable {
public:
    /// S(n,k): S(n,k) = k*S(n-1,k) + S(n-1,k-1), S(0,0)=1; zero for k>n or
    /// (k=0 and n>0).
    const BigInt& stirling2(int n, int k);

    /// Ordered Bell number a(n) = sum_k k! * S(n,k); a(0)=1.
    const BigInt& ordered_bell(int n);

    /// Eulerian number A(n,k): permutations of [n] with k descents.
    /// A(n,0)=1, A(n,n-1)=1 for n>=1, A(n,k)=0 for k<0 or k>=max(n,1),
    /// otherwise A(n,k) = (n-k)A(n-1,k-1) + (k+1)A(n-1,k).
    BigInt eulerian(int n, int k);

    const BigInt& factorial(int n);

private:
    void grow_stirling(int n);
    void grow_eulerian(int n);

    std::vector<std::vector<BigInt>> stirling_;  // stirling_[n][k], k <= n
    std::vector<std::vector<BigInt>> eulerian_;  // eulerian_[n][k], k <= max(n-1,0)
    std::vector<BigInt> bell_;
    std::vector<BigInt> factorial_;
    BigInt zero_ = 0;
};

// Convenience wrappers; each call uses a local table, so they are pure and
// safe to call concurrently (n here is small everywhere in this project).
BigInt stirling2(int n, int k);
BigInt ordered_bell(int n);
BigInt eulerian(int n, int k);
BigInt factorial(int n);

/// a(k,j) for j = 0..k: the absolute value of the coefficient of t^j in
/// (t-1)(t-3)...(t-(2k-1)), which counts signed permutations of [k] with
/// j odd cycles. Returned as absolute values; the signed coefficient is
/// (-1)^(k-j) * a(k,j).
std::vector<BigInt> odd_cycle_counts(int k);

/// b(k,j) for j = 0..k: the (signed) coefficient of t^j in
/// (t-3)(t-5)...(t-(2k+1)).
std::vector<BigInt> boxed_coeffs(int k);

}  // namespace arratlas

#endif  // ARRATLAS_COMBINAT_HPP
