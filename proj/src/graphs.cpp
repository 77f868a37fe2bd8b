#include "arratlas/graphs.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <bit>

namespace arratlas {

LabeledGraph::LabeledGraph(int n) : n_(n), adj_(static_cast<size_t>(n), 0) {
    if (n < 0 || n > 63) throw std::invalid_argument("LabeledGraph: vertex count out of range");
}

void LabeledGraph::add_edge(int i, int j) {
    if (i < 1 || j < 1 || i > n_ || j > n_ || i == j)
        throw std::invalid_argument("LabeledGraph::add_edge: bad endpoints");
    adj_[static_cast<size_t>(i - 1)] |= std::uint64_t{1} << (j - 1);
    adj_[static_cast<size_t>(j - 1)] |= std::uint64_t{1} << (i - 1);
}

bool LabeledGraph::has_edge(int i, int j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_ || i == j) return false;
    return (adj_[static_cast<size_t>(i - 1)] >> (j - 1)) & 1u;
}

int LabeledGraph::degree(int i) const {
    return std::popcount(adj_[static_cast<size_t>(i - 1)]);
}

std::vector<std::pair<int, int>> LabeledGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            if (has_edge(i, j)) out.emplace_back(i, j);
    return out;
}

namespace {

void validate(const SignedPermutation& sp) {
    const int n = static_cast<int>(sp.entries.size());
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int e : sp.entries) {
        const int label = e > 0 ? e : -e;
        if (label < 1 || label > n || e == 0 || seen[static_cast<size_t>(label)])
            throw std::invalid_argument("SignedPermutation: entries must be a signed permutation of [n]");
        seen[static_cast<size_t>(label)] = 1;
    }
    if (sp.half_marker && (*sp.half_marker < 0 || *sp.half_marker > n))
        throw std::invalid_argument("SignedPermutation: marker out of range");
}

}  // namespace

ColoredThresholdGraph decode(const SignedPermutation& sp) {
    validate(sp);
    const int n = static_cast<int>(sp.entries.size());
    ColoredThresholdGraph out{LabeledGraph(n), std::vector<Color>(static_cast<size_t>(n), Color::None)};
    const int marker = sp.half_marker.value_or(n);
    std::vector<int> present;
    present.reserve(static_cast<size_t>(n));
    for (int pos = 0; pos < n; ++pos) {
        const int e = sp.entries[static_cast<size_t>(pos)];
        const int label = e > 0 ? e : -e;
        if (e > 0)
            for (int prev : present) out.graph.add_edge(prev, label);
        if (pos >= marker)
            out.colors[static_cast<size_t>(label - 1)] = e > 0 ? Color::Blue : Color::Red;
        present.push_back(label);
    }
    return out;
}

LabeledGraph decode_graph(const SignedPermutation& sp) {
    SignedPermutation plain{sp.entries, std::nullopt};
    return decode(plain).graph;
}

namespace {

// Shared peeling worker; returns the removal classes in removal order, or
// nothing if the graph is not threshold.
std::optional<std::vector<SignedBlock>> try_peel(const LabeledGraph& g) {
    const int n = g.vertex_count();
    std::vector<SignedBlock> removed;
    std::vector<char> alive(static_cast<size_t>(n) + 1, 1);
    int alive_count = n;
    while (alive_count > 0) {
        std::vector<int> isolated, dominating;
        for (int v = 1; v <= n; ++v) {
            if (!alive[static_cast<size_t>(v)]) continue;
            int deg = 0;
            for (int u = 1; u <= n; ++u)
                if (u != v && alive[static_cast<size_t>(u)] && g.has_edge(u, v)) ++deg;
            if (deg == 0) isolated.push_back(v);
            if (deg == alive_count - 1) dominating.push_back(v);
        }
        // Terminal cases first: an edgeless remainder is one negative class,
        // a complete remainder one positive class (K_1 counts as edgeless).
        if (static_cast<int>(isolated.size()) == alive_count) {
            removed.push_back(SignedBlock{isolated, Sign::Minus});
            break;
        }
        if (static_cast<int>(dominating.size()) == alive_count) {
            removed.push_back(SignedBlock{dominating, Sign::Plus});
            break;
        }
        std::vector<int>* batch = nullptr;
        Sign sign = Sign::Minus;
        if (!isolated.empty()) {
            batch = &isolated;
        } else if (!dominating.empty()) {
            batch = &dominating;
            sign = Sign::Plus;
        } else {
            return std::nullopt;  // stalled: not a threshold graph
        }
        for (int v : *batch) alive[static_cast<size_t>(v)] = 0;
        alive_count -= static_cast<int>(batch->size());
        removed.push_back(SignedBlock{std::move(*batch), sign});
    }
    std::reverse(removed.begin(), removed.end());
    return removed;
}

}  // namespace

std::vector<SignedBlock> peel(const LabeledGraph& g) {
    auto blocks = try_peel(g);
    if (!blocks) throw NotThreshold("peel: removal stalled, graph is not threshold");
    return std::move(*blocks);
}

bool is_threshold(const LabeledGraph& g) {
    return try_peel(g).has_value();
}

std::vector<SignedBlock> canonical_partition(const SignedPermutation& sp) {
    validate(sp);
    std::vector<int> entries = sp.entries;
    const size_t n = entries.size();
    if (n == 0) return {};
    if (n == 1) return {SignedBlock{{entries[0] > 0 ? entries[0] : -entries[0]}, Sign::Minus}};
    // The first entry's sign never affects the graph; fold it into the
    // second entry's run.
    if ((entries[0] > 0) != (entries[1] > 0)) entries[0] = -entries[0];
    std::vector<SignedBlock> blocks;
    size_t i = 0;
    while (i < n) {
        const bool pos = entries[i] > 0;
        SignedBlock b;
        b.sign = pos ? Sign::Plus : Sign::Minus;
        while (i < n && (entries[i] > 0) == pos) {
            b.elements.push_back(entries[i] > 0 ? entries[i] : -entries[i]);
            ++i;
        }
        std::sort(b.elements.begin(), b.elements.end());
        blocks.push_back(std::move(b));
    }
    return blocks;
}

SignedPermutation half_order_to_signed_permutation(const HalfOrder& h) {
    SignedPermutation sp;
    int marker = 0;
    for (size_t b = 0; b < h.blocks.size(); ++b) {
        for (int e : h.blocks[b].elements)
            sp.entries.push_back(h.blocks[b].sign == Sign::Plus ? e : -e);
        if (static_cast<int>(b) < h.half_position) marker = static_cast<int>(sp.entries.size());
    }
    sp.half_marker = marker;
    return sp;
}

SignedPermutation threshold_order_to_signed_permutation(const std::vector<SignedBlock>& blocks) {
    SignedPermutation sp;
    for (const auto& b : blocks)
        for (int e : b.elements) sp.entries.push_back(b.sign == Sign::Plus ? e : -e);
    return sp;
}

void for_each_colored(int n, const std::function<void(const ColoredThresholdGraph&)>& fn) {
    if (n < 1) throw std::invalid_argument("for_each_colored: need n >= 1");
    if (n == 1) {
        for (Color c : {Color::None, Color::Red, Color::Blue})
            fn(ColoredThresholdGraph{LabeledGraph(1), {c}});
        return;
    }
    for_each_half_order(n, [&](const HalfOrder& h) { fn(decode(half_order_to_signed_permutation(h))); });
}

std::vector<ColoredThresholdGraph> enumerate_colored(int n) {
    std::vector<ColoredThresholdGraph> out;
    for_each_colored(n, [&](const ColoredThresholdGraph& g) { out.push_back(g); });
    return out;
}

void for_each_threshold_graph(int n, const std::function<void(const LabeledGraph&)>& fn) {
    if (n < 1) throw std::invalid_argument("for_each_threshold_graph: need n >= 1");
    if (n == 1) {
        fn(LabeledGraph(1));
        return;
    }
    for (const auto& blocks : enumerate_threshold_orders(n))
        fn(decode_graph(threshold_order_to_signed_permutation(blocks)));
}

std::vector<LabeledGraph> enumerate_threshold_graphs(int n) {
    std::vector<LabeledGraph> out;
    for_each_threshold_graph(n, [&](const LabeledGraph& g) { out.push_back(g); });
    return out;
}

SignVector graph_to_region(const ColoredThresholdGraph& g) {
    const int n = g.graph.vertex_count();
    if (static_cast<int>(g.colors.size()) != n)
        throw std::invalid_argument("graph_to_region: color table size mismatch");
    if (!is_threshold(g.graph)) throw NotThreshold("graph_to_region: underlying graph not threshold");
    const TypeCSubarrangement arr = box(threshold_arrangement(n));
    SignVector sv;
    sv.reserve(arr.size());
    for (const auto& h : arr.hyperplanes()) {
        switch (h.kind) {
            case Hyperplane::Kind::SumZero:
                sv.push_back(g.graph.has_edge(h.i, h.j) ? 1 : -1);
                break;
            case Hyperplane::Kind::BoxLow:
                sv.push_back(g.colors[static_cast<size_t>(h.i - 1)] == Color::Red ? -1 : 1);
                break;
            case Hyperplane::Kind::BoxHigh:
                sv.push_back(g.colors[static_cast<size_t>(h.i - 1)] == Color::Blue ? 1 : -1);
                break;
            default:
                throw std::logic_error("graph_to_region: unexpected hyperplane kind");
        }
    }
    return sv;
}

SignVector threshold_region_dictionary(const LabeledGraph& g) {
    if (!is_threshold(g)) throw NotThreshold("threshold_region_dictionary: graph not threshold");
    const TypeCSubarrangement arr = threshold_arrangement(g.vertex_count());
    SignVector sv;
    sv.reserve(arr.size());
    for (const auto& h : arr.hyperplanes()) sv.push_back(g.has_edge(h.i, h.j) ? 1 : -1);
    return sv;
}

std::string graph_to_json(const ColoredThresholdGraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [i, j] : g.graph.edges()) edges.push_back({i, j});
    nlohmann::json colors = nlohmann::json::object();
    for (size_t v = 0; v < g.colors.size(); ++v) {
        if (g.colors[v] == Color::Red) colors[std::to_string(v + 1)] = "red";
        else if (g.colors[v] == Color::Blue) colors[std::to_string(v + 1)] = "blue";
    }
    nlohmann::json out;
    out["n"] = g.graph.vertex_count();
    out["edges"] = std::move(edges);
    out["colors"] = std::move(colors);
    return out.dump();
}

}  // namespace arratlas
