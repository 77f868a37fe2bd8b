#ifndef ARRATLAS_GRAPHS_HPP
#define ARRATLAS_GRAPHS_HPP

#include "arratlas/oracle.hpp"
#include "arratlas/orders.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace arratlas {

struct NotThreshold : std::runtime_error {
    explicit NotThreshold(const std::string& what) : std::runtime_error(what) {}
};

/// Simple graph with vertices labeled 1..n, stored as adjacency bitmasks.
class LabeledGraph {
public:
    explicit LabeledGraph(int n);

    int vertex_count() const { return n_; }
    void add_edge(int i, int j);
    bool has_edge(int i, int j) const;
    int degree(int i) const;
    /// Edges as (i, j) pairs with i < j, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const LabeledGraph&) const = default;

private:
    int n_;
    std::vector<std::uint64_t> adj_;
};

/// A signed permutation of [n]: entries are +-label, each label exactly once.
/// The optional half marker (a position in [0, n], counting entries before
/// it) switches vertex coloring on for everything after it; a marker at
/// position n means nothing is colored.
struct SignedPermutation {
    std::vector<int> entries;
    std::optional<int> half_marker;

    bool operator==(const SignedPermutation&) const = default;
};

enum class Color : std::int8_t { None, Red, Blue };

struct ColoredThresholdGraph {
    LabeledGraph graph;
    std::vector<Color> colors;  // index label-1

    bool operator==(const ColoredThresholdGraph&) const = default;
};

/// Builds the graph a signed permutation describes: a positive entry joins
/// its label to everything already present, a negative entry adds it
/// isolated. Entries after the half marker are colored (blue when positive,
/// red when negative); with no marker, or the marker at the end, nothing is.
ColoredThresholdGraph decode(const SignedPermutation& sp);

/// The underlying uncolored graph (marker ignored).
LabeledGraph decode_graph(const SignedPermutation& sp);

/// The canonical alternating signed partition of a threshold graph,
/// obtained by repeatedly removing all isolated vertices (a negative class)
/// or else all dominating vertices (a positive class) and reversing the
/// removal order. The first block has size >= 2 for n >= 2; a single vertex
/// peels as one negative block. Throws NotThreshold when the removal stalls.
std::vector<SignedBlock> peel(const LabeledGraph& g);

/// True iff peeling succeeds.
bool is_threshold(const LabeledGraph& g);

/// The normal form of a signed permutation without marker: the sign of the
/// first entry is irrelevant to decode, so it is folded into the second
/// entry's run, and maximal constant-sign runs become blocks. This is what
/// peel(decode(sp)) returns for any sp.
std::vector<SignedBlock> canonical_partition(const SignedPermutation& sp);

/// Blocks in order, elements ascending with the block's sign, marker after
/// the first `half_position` blocks.
SignedPermutation half_order_to_signed_permutation(const HalfOrder& h);

/// Same, for a threshold order (no marker).
SignedPermutation threshold_order_to_signed_permutation(const std::vector<SignedBlock>& blocks);

/// All labeled colored threshold graphs on [n], each exactly once, produced
/// from the canonical half-orders of [n] for n >= 2; at n = 1 the three
/// legal colorings of a single vertex (uncolored, red, blue).
void for_each_colored(int n, const std::function<void(const ColoredThresholdGraph&)>& fn);
std::vector<ColoredThresholdGraph> enumerate_colored(int n);

/// All labeled (uncolored) threshold graphs on [n], each exactly once, from
/// the alternating partitions with first block size > 1; n = 1 gives the
/// single one-vertex graph.
void for_each_threshold_graph(int n, const std::function<void(const LabeledGraph&)>& fn);
std::vector<LabeledGraph> enumerate_threshold_graphs(int n);

/// The region of BT_n a colored threshold graph labels, as a sign vector
/// over box(threshold_arrangement(n)): x_i + x_j > 0 iff {i,j} is an edge,
/// x_i above/below/inside the walls by color (blue, red, none).
SignVector graph_to_region(const ColoredThresholdGraph& g);

/// The region of T_n an uncolored threshold graph labels: x_i + x_j > 0 iff
/// {i,j} is an edge. Throws NotThreshold for non-threshold input.
SignVector threshold_region_dictionary(const LabeledGraph& g);

std::string graph_to_json(const ColoredThresholdGraph& g);

}  // namespace arratlas

#endif  // ARRATLAS_GRAPHS_HPP
