#ifndef ARRATLAS_ARRANGEMENT_HPP
#define ARRATLAS_ARRANGEMENT_HPP

#include "arratlas/exactmath.hpp"

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace arratlas {

struct EvenModulus : std::runtime_error {
    explicit EvenModulus(const std::string& what) : std::runtime_error(what) {}
};

struct AlreadyBoxed : std::runtime_error {
    explicit AlreadyBoxed(const std::string& what) : std::runtime_error(what) {}
};

/// The characteristic polynomial interpolated from point counts failed the
/// extra-modulus check: the sampled moduli were not in the polynomial range.
struct VerificationModulusMismatch : std::runtime_error {
    explicit VerificationModulusMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// A hyperplane of the boxed type-C universe. Pair kinds require i < j;
/// box_low / box_high are the walls x_i = -1/2 and x_i = +1/2.
struct Hyperplane {
    enum class Kind : std::uint8_t { SumZero, DiffZero, CoordZero, BoxLow, BoxHigh };

    Kind kind;
    int i = 0;
    int j = 0;  // used by the pair kinds only

    static Hyperplane sum_zero(int i, int j);
    static Hyperplane diff_zero(int i, int j);
    static Hyperplane coord_zero(int i);
    static Hyperplane box_low(int i);
    static Hyperplane box_high(int i);

    bool is_box() const { return kind == Kind::BoxLow || kind == Kind::BoxHigh; }
    int max_index() const { return kind == Kind::SumZero || kind == Kind::DiffZero ? j : i; }

    auto operator<=>(const Hyperplane&) const = default;

    std::string to_string() const;
};

/// A finite sub-arrangement of the (boxed) type-C arrangement in R^n.
/// Hyperplanes are kept deduplicated in the canonical (kind, i, j) order,
/// which also fixes the sign-vector coordinate order used everywhere.
class TypeCSubarrangement {
public:
    explicit TypeCSubarrangement(int n) : n_(n) {
        if (n < 0) throw std::invalid_argument("TypeCSubarrangement: negative dimension");
    }
    TypeCSubarrangement(int n, std::vector<Hyperplane> hyperplanes);

    int dimension() const { return n_; }
    const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
    size_t size() const { return hyperplanes_.size(); }
    bool has_box_walls() const;

    void add(const Hyperplane& h);

    bool operator==(const TypeCSubarrangement& other) const = default;

private:
    int n_;
    std::vector<Hyperplane> hyperplanes_;  // sorted, unique
};

/// T_n = { x_i + x_j = 0 : 1 <= i < j <= n }.
TypeCSubarrangement threshold_arrangement(int n);

/// arr plus the 2n walls x_i = -1/2, +1/2. Throws AlreadyBoxed if arr
/// already contains a wall.
TypeCSubarrangement box(const TypeCSubarrangement& arr);

/// Number of points of Z_q^n (residues -(q-1)/2 .. (q-1)/2) lying on no
/// hyperplane of arr, for odd q >= 3. Wall membership is tested as
/// 2*a_i +- 1 == 0 (mod q). The iteration space may be sharded across
/// `jobs` threads; the result is the exact sum of shard counts and does
/// not depend on jobs.
BigInt count_complement(const TypeCSubarrangement& arr, int q, int jobs = 1);

/// Characteristic polynomial by finite-field sampling: counts the complement
/// at the n+1 odd moduli q0, q0+2, ... , interpolates, then checks the result
/// against one further odd modulus. q0 defaults to 2n+3. Throws
/// VerificationModulusMismatch if the extra sample disagrees.
Polynomial char_poly(const TypeCSubarrangement& arr, int q0 = 0, int jobs = 1);

/// r(arr) = (-1)^n chi(-1).
BigInt regions(const TypeCSubarrangement& arr, int jobs = 1);
/// b(arr) = (-1)^n chi(1).
BigInt bounded_regions(const TypeCSubarrangement& arr, int jobs = 1);

std::string arrangement_to_json(const TypeCSubarrangement& arr);
TypeCSubarrangement arrangement_from_json(const std::string& json_text);

}  // namespace arratlas

#endif  // ARRATLAS_ARRANGEMENT_HPP
