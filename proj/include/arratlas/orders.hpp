#ifndef ARRATLAS_ORDERS_HPP
#define ARRATLAS_ORDERS_HPP

#include "arratlas/exactmath.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace arratlas {

struct NotCanonical : std::runtime_error {
    explicit NotCanonical(const std::string& what) : std::runtime_error(what) {}
};

struct PointOnHyperplane : std::runtime_error {
    explicit PointOnHyperplane(const std::string& what) : std::runtime_error(what) {}
};

enum class Sign : std::int8_t { Plus, Minus };

inline Sign opposite(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

/// A nonempty subset of [n] carrying a sign. Elements are kept ascending.
struct SignedBlock {
    std::vector<int> elements;
    Sign sign = Sign::Plus;

    bool operator==(const SignedBlock&) const = default;
};

/// Canonical region label: an ordered signed partition of [n] together with
/// the position of the 1/2 marker (the number of blocks strictly before it).
/// This is the "second half" of the symmetric block order of a region; the
/// first half is its negation.
struct HalfOrder {
    std::vector<SignedBlock> blocks;
    int half_position = 0;

    bool operator==(const HalfOrder&) const = default;
};

enum class FormTag { Form1, Form2, Form3 };

/// Decides which of the three canonical shapes a half-order has:
///   Form1: 1/2 before every block, signs alternate throughout.
///   Form2: first block before 1/2 and of size > 1; signs alternate on each
///          side of the marker separately (the first block after the marker
///          picks its sign freely).
///   Form3: exactly one block (a singleton) before 1/2, same sign as the
///          block right after the marker, signs alternate from there on.
/// Throws NotCanonical if the blocks do not partition [n] or no form matches.
FormTag classify_form(const HalfOrder& h);

/// All canonical half-orders on [n], n >= 2, in a fixed deterministic order:
/// Form1, Form2 with marker last, Form2 with blocks after the marker, Form3;
/// within a form, partitions are enumerated by ascending first-block bitmask
/// recursively, then marker split, then signs (+ before -).
void for_each_half_order(int n, const std::function<void(const HalfOrder&)>& fn);
std::vector<HalfOrder> enumerate_half_orders(int n);

/// The four closed-form sub-counts of the canonical half-orders, whose total
/// is the number of regions of BT_n.
struct FormCounts {
    BigInt form1;
    BigInt form2a;  // marker after every block
    BigInt form2b;  // at least one block after the marker
    BigInt form3;

    BigInt total() const { return form1 + form2a + form2b + form3; }

    bool operator==(const FormCounts&) const = default;
};

FormCounts count_by_form(int n);

/// A representative point of the region labelled by h: block i (1-based)
/// gets magnitude i/(2n+2) if it precedes the marker and 1/2 + (i-p)/(2n+2)
/// otherwise, and x_a = +-magnitude by block sign. The point lies on no
/// hyperplane of BT_n.
std::vector<BigRational> order_to_point(const HalfOrder& h);

/// Inverse direction: recovers the canonical half-order of the region
/// containing p. Only the region-level data of p is used (the signs of
/// x_i + x_j and the positions of each x_i relative to +-1/2), so any two
/// points of one region yield the same half-order. Throws PointOnHyperplane
/// if p lies on a hyperplane of BT_n, and NotCanonical for the one shape
/// with no canonical label (n = 1 with |x_1| < 1/2).
HalfOrder point_to_order(const std::vector<BigRational>& p, int n);

/// The threshold specialization: ordered signed partitions of [n] with first
/// block of size > 1 and alternating signs, which label the regions of T_n.
/// Enumerated for n >= 2 in the same deterministic partition/sign order as
/// the half-orders.
std::vector<std::vector<SignedBlock>> enumerate_threshold_orders(int n);

/// Representative point for a threshold order (no box walls involved):
/// block i gets magnitude i/(2n+2).
std::vector<BigRational> threshold_order_to_point(const std::vector<SignedBlock>& blocks, int n);

std::string half_order_to_json(const HalfOrder& h);

}  // namespace arratlas

#endif  // ARRATLAS_ORDERS_HPP
