#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arratlas/formulas.hpp"
#include "arratlas/graphs.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace arratlas;

namespace {

LabeledGraph graph_with_edges(int n, std::vector<std::pair<int, int>> edges) {
    LabeledGraph g(n);
    for (auto [i, j] : edges) g.add_edge(i, j);
    return g;
}

SignedPermutation sp(std::vector<int> entries, std::optional<int> marker = std::nullopt) {
    return SignedPermutation{std::move(entries), marker};
}

// Random signed permutation, optionally with a marker.
SignedPermutation random_sp(std::mt19937_64& rng, int n, bool with_marker) {
    std::vector<int> labels(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) labels[static_cast<size_t>(i)] = i + 1;
    std::shuffle(labels.begin(), labels.end(), rng);
    std::bernoulli_distribution coin(0.5);
    for (auto& l : labels)
        if (coin(rng)) l = -l;
    std::optional<int> marker;
    if (with_marker) marker = std::uniform_int_distribution<int>(0, n)(rng);
    return SignedPermutation{std::move(labels), marker};
}

// Maximal runs of constant sign, also cut at the marker; used to exercise
// the block-reorder invariance.
std::vector<std::pair<int, int>> codec_runs(const SignedPermutation& s) {
    std::vector<std::pair<int, int>> runs;
    const int n = static_cast<int>(s.entries.size());
    const int marker = s.half_marker.value_or(n);
    int start = 0;
    for (int i = 1; i <= n; ++i) {
        const bool cut = i == n || i == marker ||
                         (s.entries[static_cast<size_t>(i)] > 0) !=
                             (s.entries[static_cast<size_t>(i - 1)] > 0);
        if (cut) {
            runs.emplace_back(start, i);
            start = i;
        }
    }
    return runs;
}

}  // namespace

TEST_CASE("decode the uncolored construction") {
    const auto g = decode_graph(sp({-2, -3, 1, 4, -5}));
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}});
    CHECK(g.degree(5) == 0);
}

TEST_CASE("decode the colored construction") {
    const auto g = decode(sp({2, 1, 3, -4, -5}, 1));
    CHECK(g.graph.edges() == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(g.colors == std::vector<Color>{Color::Blue, Color::None, Color::Blue, Color::Red, Color::Red});
}

TEST_CASE("decode trivial cases") {
    const auto g = decode(sp({1}, 1));  // marker at the end: no colors
    CHECK(g.graph.vertex_count() == 1);
    CHECK(g.graph.edges().empty());
    CHECK(g.colors == std::vector<Color>{Color::None});
    CHECK(decode(sp({1})) == decode(sp({-1})));

    CHECK_THROWS_AS(decode(sp({1, 1})), std::invalid_argument);
    CHECK_THROWS_AS(decode(sp({1, 3})), std::invalid_argument);
    CHECK_THROWS_AS(decode(sp({1, 2}, 5)), std::invalid_argument);
}

TEST_CASE("peel") {
    const auto g = decode_graph(sp({-2, -3, 1, 4, -5}));
    CHECK(peel(g) == std::vector<SignedBlock>{{{2, 3}, Sign::Minus}, {{1, 4}, Sign::Plus}, {{5}, Sign::Minus}});
    CHECK(peel(LabeledGraph(3)) == std::vector<SignedBlock>{{{1, 2, 3}, Sign::Minus}});

    const auto p4 = graph_with_edges(4, {{1, 2}, {2, 3}, {3, 4}});
    CHECK_THROWS_AS(peel(p4), NotThreshold);
}

TEST_CASE("is_threshold") {
    for (unsigned mask = 0; mask < 8; ++mask) {  // all graphs on 3 vertices
        LabeledGraph g(3);
        if (mask & 1) g.add_edge(1, 2);
        if (mask & 2) g.add_edge(1, 3);
        if (mask & 4) g.add_edge(2, 3);
        CHECK(is_threshold(g));
    }
    const auto c4 = graph_with_edges(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    CHECK_FALSE(is_threshold(c4));
    const auto p4 = graph_with_edges(4, {{1, 2}, {2, 3}, {3, 4}});
    CHECK_FALSE(is_threshold(p4));
    for (int n = 1; n <= 6; ++n) {
        LabeledGraph k(n);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) k.add_edge(i, j);
        CHECK(is_threshold(k));
    }
}

TEST_CASE("peel returns the canonical partition of the encoding") {
    std::mt19937_64 rng(101);
    for (int n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 200; ++trial) {
            const SignedPermutation s = random_sp(rng, n, false);
            CHECK(peel(decode_graph(s)) == canonical_partition(s));
        }
    }
}

TEST_CASE("codec fact: the first sign does not matter") {
    std::mt19937_64 rng(103);
    for (int n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 100; ++trial) {
            SignedPermutation s = random_sp(rng, n, trial % 2 == 0);
            if (s.half_marker && *s.half_marker == 0) s.half_marker = 1;  // keep the first entry unmarked
            SignedPermutation flipped = s;
            flipped.entries[0] = -flipped.entries[0];
            CHECK(decode(s) == decode(flipped));
        }
    }
}

TEST_CASE("codec fact: entries permute freely within a run") {
    std::mt19937_64 rng(107);
    for (int n = 2; n <= 6; ++n) {
        for (int trial = 0; trial < 100; ++trial) {
            const SignedPermutation s = random_sp(rng, n, trial % 2 == 1);
            const auto runs = codec_runs(s);
            SignedPermutation shuffled = s;
            for (auto [lo, hi] : runs)
                std::shuffle(shuffled.entries.begin() + lo, shuffled.entries.begin() + hi, rng);
            CHECK(decode(s) == decode(shuffled));
        }
    }
}

TEST_CASE("enumerate_colored") {
    CHECK(enumerate_colored(1).size() == 3);
    CHECK(enumerate_colored(2).size() == 12);
    CHECK(enumerate_colored(3).size() == 64);

    int uncolored = 0;
    std::set<std::string> seen;
    for (const auto& g : enumerate_colored(2)) {
        CHECK(seen.insert(graph_to_json(g)).second);
        if (std::all_of(g.colors.begin(), g.colors.end(), [](Color c) { return c == Color::None; }))
            ++uncolored;
    }
    CHECK(uncolored == 2);  // the bounded regions of BT_2
}

TEST_CASE("uncolored graphs are the bounded regions") {
    for (int n = 2; n <= 4; ++n) {
        const auto arr = box(threshold_arrangement(n));
        BigInt uncolored = 0;
        for_each_colored(n, [&](const ColoredThresholdGraph& g) {
            if (!std::all_of(g.colors.begin(), g.colors.end(),
                             [](Color c) { return c == Color::None; }))
                return;
            ++uncolored;
            // Every wall constraint points inward.
            const SignVector sv = graph_to_region(g);
            size_t idx = 0;
            for (const auto& h : arr.hyperplanes()) {
                if (h.kind == Hyperplane::Kind::BoxLow) CHECK(sv[idx] == 1);
                if (h.kind == Hyperplane::Kind::BoxHigh) CHECK(sv[idx] == -1);
                ++idx;
            }
        });
        CHECK(uncolored == regions_threshold(n));
    }
}

TEST_CASE("labeled threshold graph counts") {
    const std::vector<long long> expected = {1, 2, 8, 46, 332, 2874};
    for (int n = 1; n <= 6; ++n) {
        const auto graphs = enumerate_threshold_graphs(n);
        CHECK(BigInt(graphs.size()) == BigInt(expected[static_cast<size_t>(n - 1)]));
        std::set<std::vector<std::pair<int, int>>> seen;
        for (const auto& g : graphs) CHECK(seen.insert(g.edges()).second);
    }
    for (int n = 2; n <= 6; ++n)
        CHECK(BigInt(enumerate_threshold_graphs(n).size()) == regions_threshold(n));
}

TEST_CASE("graph_to_region on the BT_2 picture") {
    // Canonical hyperplane order for BT_2: sum(1,2), low(1), low(2), high(1), high(2).
    ColoredThresholdGraph edge_uncolored{graph_with_edges(2, {{1, 2}}), {Color::None, Color::None}};
    CHECK(graph_to_region(edge_uncolored) == SignVector{1, 1, 1, -1, -1});

    ColoredThresholdGraph noedge_uncolored{LabeledGraph(2), {Color::None, Color::None}};
    CHECK(graph_to_region(noedge_uncolored) == SignVector{-1, 1, 1, -1, -1});

    ColoredThresholdGraph mixed{graph_with_edges(2, {{1, 2}}), {Color::Blue, Color::Red}};
    CHECK(graph_to_region(mixed) == SignVector{1, 1, -1, 1, -1});
}

TEST_CASE("threshold_region_dictionary") {
    CHECK(threshold_region_dictionary(graph_with_edges(2, {{1, 2}})) == SignVector{1});
    CHECK(threshold_region_dictionary(LabeledGraph(2)) == SignVector{-1});

    const auto fig = decode_graph(sp({-2, -3, 1, 4, -5}));
    const auto sv = threshold_region_dictionary(fig);
    const auto arr = threshold_arrangement(5);
    REQUIRE(sv.size() == arr.size());
    for (size_t h = 0; h < sv.size(); ++h) {
        const auto& hp = arr.hyperplanes()[h];
        CHECK(sv[h] == (fig.has_edge(hp.i, hp.j) ? 1 : -1));
    }

    const auto p4 = graph_with_edges(4, {{1, 2}, {2, 3}, {3, 4}});
    CHECK_THROWS_AS(threshold_region_dictionary(p4), NotThreshold);
}

TEST_CASE("graph json shape") {
    const auto g = decode(sp({2, 1, 3, -4, -5}, 1));
    CHECK(graph_to_json(g) ==
          R"({"colors":{"1":"blue","3":"blue","4":"red","5":"red"},"edges":[[1,2],[1,3],[2,3]],"n":5})");
}
