#ifndef ARRATLAS_ORACLE_HPP
#define ARRATLAS_ORACLE_HPP

#include "arratlas/arrangement.hpp"
#include "arratlas/orders.hpp"

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace arratlas {

struct SearchSpaceTooLarge : std::runtime_error {
    explicit SearchSpaceTooLarge(const std::string& what) : std::runtime_error(what) {}
};

/// Which open side of each hyperplane a region lies on: +1 or -1 per
/// hyperplane, in the arrangement's canonical (kind, i, j) order.
using SignVector = std::vector<std::int8_t>;

/// Sign vector of a concrete point; throws PointOnHyperplane if any
/// functional vanishes there.
SignVector point_sign_vector(const TypeCSubarrangement& arr, const std::vector<BigRational>& point);

/// Per-coordinate candidate values for brute-force region enumeration:
/// {+-j/(2n+2), +-(1/2 + j/(2n+2)) : j in [n]}, 4n values with pairwise
/// distinct absolute values, none equal to 1/2. Dense enough that every
/// region of T_n / BT_n (and, checked against Zaslavsky, of small type-C
/// sub-arrangements) contains a lattice point.
struct GenericLattice {
    std::vector<BigRational> values;
};

GenericLattice build_lattice(int n);

/// Ground truth by exhaustion: all lattice points not on any hyperplane,
/// collected as distinct sign vectors. Throws SearchSpaceTooLarge when
/// (4n)^n exceeds max_points (default 1e8, CLI-overridable).
std::set<SignVector> enumerate_regions(const TypeCSubarrangement& arr, int jobs = 1,
                                       std::uint64_t max_points = 100'000'000);

/// Outcome of checking a stream of candidate region labels against the
/// oracle's region set.
struct Report {
    std::uint64_t missing = 0;      // oracle regions no label hit
    std::uint64_t duplicates = 0;   // labels equal to an earlier label
    std::uint64_t extraneous = 0;   // labels matching no oracle region
    bool ok() const { return missing == 0 && duplicates == 0 && extraneous == 0; }

    bool operator==(const Report&) const = default;
};

Report compare_with(const TypeCSubarrangement& arr, const std::vector<SignVector>& labels,
                    int jobs = 1, std::uint64_t max_points = 100'000'000);

/// Same check against a precomputed oracle set (avoids re-enumeration).
Report compare_with_set(const std::set<SignVector>& oracle, const std::vector<SignVector>& labels);

std::string report_to_json(const Report& r);

}  // namespace arratlas

#endif  // ARRATLAS_ORACLE_HPP
