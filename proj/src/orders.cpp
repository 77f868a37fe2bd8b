#include "arratlas/orders.hpp"

#include "arratlas/combinat.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>

namespace arratlas {

namespace {

// Returns n after checking that the blocks are nonempty, internally sorted
// and partition [n].
int checked_ground_set(const std::vector<SignedBlock>& blocks) {
    int n = 0;
    for (const auto& b : blocks) {
        if (b.elements.empty()) throw NotCanonical("half-order has an empty block");
        if (!std::is_sorted(b.elements.begin(), b.elements.end()))
            throw NotCanonical("block elements must be ascending");
        n = std::max(n, b.elements.back());
    }
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    int count = 0;
    for (const auto& b : blocks)
        for (int e : b.elements) {
            if (e < 1 || seen[static_cast<size_t>(e)]) throw NotCanonical("blocks do not partition [n]");
            seen[static_cast<size_t>(e)] = 1;
            ++count;
        }
    if (count != n) throw NotCanonical("blocks do not partition [n]");
    return n;
}

bool alternating(const std::vector<SignedBlock>& blocks, int lo, int hi) {
    for (int i = lo; i + 1 < hi; ++i)
        if (blocks[static_cast<size_t>(i)].sign == blocks[static_cast<size_t>(i + 1)].sign) return false;
    return true;
}

}  // namespace

FormTag classify_form(const HalfOrder& h) {
    checked_ground_set(h.blocks);
    const int k = static_cast<int>(h.blocks.size());
    const int p = h.half_position;
    if (p < 0 || p > k) throw NotCanonical("marker position out of range");
    if (k == 0) throw NotCanonical("no blocks");

    if (p == 0) {
        if (alternating(h.blocks, 0, k)) return FormTag::Form1;
        throw NotCanonical("marker-first order must alternate signs");
    }
    if (h.blocks[0].elements.size() >= 2) {
        if (alternating(h.blocks, 0, p) && alternating(h.blocks, p, k)) return FormTag::Form2;
        throw NotCanonical("signs must alternate on each side of the marker");
    }
    if (p == 1 && k >= 2 && h.blocks[0].sign == h.blocks[1].sign && alternating(h.blocks, 1, k))
        return FormTag::Form3;
    throw NotCanonical("half-order matches no canonical form");
}

namespace {

using Mask = std::uint32_t;

std::vector<int> mask_elements(Mask m) {
    std::vector<int> out;
    for (int e = 1; m != 0; ++e, m >>= 1)
        if (m & 1u) out.push_back(e);
    return out;
}

// Ordered set partitions of `mask`, first block restricted to
// popcount >= min_first_size; submasks are visited in ascending numeric
// order, which fixes the enumeration order everywhere.
void for_each_partition(Mask mask, int min_first_size, std::vector<Mask>& acc,
                        const std::function<void(const std::vector<Mask>&)>& fn) {
    if (mask == 0) {
        fn(acc);
        return;
    }
    Mask s = 0;
    do {
        s = (s - mask) & mask;
        if (std::popcount(s) >= (acc.empty() ? min_first_size : 1)) {
            acc.push_back(s);
            for_each_partition(mask ^ s, min_first_size, acc, fn);
            acc.pop_back();
        }
    } while (s != mask);
}

HalfOrder assemble(const std::vector<Mask>& parts, const std::vector<Sign>& signs, int half_position) {
    HalfOrder h;
    h.blocks.reserve(parts.size());
    for (size_t b = 0; b < parts.size(); ++b)
        h.blocks.push_back(SignedBlock{mask_elements(parts[b]), signs[b]});
    h.half_position = half_position;
    return h;
}

std::vector<Sign> alternate_from(Sign first, size_t count) {
    std::vector<Sign> out(count);
    for (size_t i = 0; i < count; ++i) out[i] = (i % 2 == 0) ? first : opposite(first);
    return out;
}

}  // namespace

void for_each_half_order(int n, const std::function<void(const HalfOrder&)>& fn) {
    if (n < 2) throw std::invalid_argument("for_each_half_order: need n >= 2");
    const Mask full = (Mask{1} << n) - 1;
    std::vector<Mask> acc;

    // Form 1: marker first, alternating signs throughout.
    for_each_partition(full, 1, acc, [&](const std::vector<Mask>& parts) {
        for (Sign s : {Sign::Plus, Sign::Minus})
            fn(assemble(parts, alternate_from(s, parts.size()), 0));
    });

    // Form 2, marker last.
    for_each_partition(full, 2, acc, [&](const std::vector<Mask>& parts) {
        for (Sign s : {Sign::Plus, Sign::Minus})
            fn(assemble(parts, alternate_from(s, parts.size()),
                        static_cast<int>(parts.size())));
    });

    // Form 2, marker between blocks l-1 and l (so both sides are nonempty);
    // each side alternates independently.
    for_each_partition(full, 2, acc, [&](const std::vector<Mask>& parts) {
        const int k = static_cast<int>(parts.size());
        for (int l = 1; l <= k - 1; ++l) {
            for (Sign s1 : {Sign::Plus, Sign::Minus}) {
                for (Sign s2 : {Sign::Plus, Sign::Minus}) {
                    std::vector<Sign> signs = alternate_from(s1, static_cast<size_t>(l));
                    const std::vector<Sign> tail = alternate_from(s2, static_cast<size_t>(k - l));
                    signs.insert(signs.end(), tail.begin(), tail.end());
                    fn(assemble(parts, signs, l));
                }
            }
        }
    });

    // Form 3: singleton first block, same sign as the block after the marker.
    for (int m = 1; m <= n; ++m) {
        const Mask rest = full ^ (Mask{1} << (m - 1));
        for_each_partition(rest, 1, acc, [&](const std::vector<Mask>& parts) {
            for (Sign s : {Sign::Plus, Sign::Minus}) {
                std::vector<Mask> all;
                all.reserve(parts.size() + 1);
                all.push_back(Mask{1} << (m - 1));
                all.insert(all.end(), parts.begin(), parts.end());
                std::vector<Sign> signs = alternate_from(s, parts.size());
                signs.insert(signs.begin(), s);
                fn(assemble(all, signs, 1));
            }
        });
    }
}

std::vector<HalfOrder> enumerate_half_orders(int n) {
    std::vector<HalfOrder> out;
    for_each_half_order(n, [&](const HalfOrder& h) { out.push_back(h); });
    return out;
}

FormCounts count_by_form(int n) {
    if (n < 2) throw std::invalid_argument("count_by_form: need n >= 2");
    SequenceTable t;
    FormCounts c;
    c.form1 = BigInt(2) * t.ordered_bell(n);
    c.form2a = BigInt(2) * (t.ordered_bell(n) - BigInt(n) * t.ordered_bell(n - 1));
    c.form2b = 0;
    for (int k = 1; k <= n; ++k) {
        const BigInt fac_gap = t.factorial(k) - t.factorial(k - 1);
        const BigInt part = BigInt(k) * t.stirling2(n, k) - BigInt(n) * t.stirling2(n - 1, k - 1);
        c.form2b += BigInt(4) * fac_gap * part;
    }
    c.form3 = BigInt(2) * BigInt(n) * t.ordered_bell(n - 1);
    return c;
}

std::vector<BigRational> order_to_point(const HalfOrder& h) {
    const int n = checked_ground_set(h.blocks);
    const int p = h.half_position;
    const int den = 2 * n + 2;
    std::vector<BigRational> x(static_cast<size_t>(n));
    for (size_t b = 0; b < h.blocks.size(); ++b) {
        const int i = static_cast<int>(b) + 1;
        BigRational mag = (i <= p) ? BigRational(i, den)
                                   : BigRational(1, 2) + BigRational(i - p, den);
        if (h.blocks[b].sign == Sign::Minus) mag = -mag;
        for (int a : h.blocks[b].elements) x[static_cast<size_t>(a - 1)] = mag;
    }
    return x;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
    }
    int find(int a) {
        while (parent[static_cast<size_t>(a)] != a) {
            parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
            a = parent[static_cast<size_t>(a)];
        }
        return a;
    }
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

}  // namespace

HalfOrder point_to_order(const std::vector<BigRational>& p, int n) {
    if (static_cast<int>(p.size()) != n || n < 1)
        throw std::invalid_argument("point_to_order: bad point size");
    const BigRational half(1, 2);

    for (int i = 0; i < n; ++i) {
        if (p[static_cast<size_t>(i)] == half || p[static_cast<size_t>(i)] == -half)
            throw PointOnHyperplane("point_to_order: x_" + std::to_string(i + 1) + " = +-1/2");
        for (int j = i + 1; j < n; ++j)
            if (p[static_cast<size_t>(i)] + p[static_cast<size_t>(j)] == 0)
                throw PointOnHyperplane("point_to_order: x_" + std::to_string(i + 1) + " + x_" +
                                        std::to_string(j + 1) + " = 0");
    }

    // Region-level data only: zones relative to the walls and the signs of
    // the pairwise sums. The actual coordinate values are not used beyond
    // this point, so every point of a region maps to the same half-order.
    std::vector<int> zone(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto& v = p[static_cast<size_t>(i)];
        zone[static_cast<size_t>(i)] = v > half ? 1 : (v < -half ? -1 : 0);
    }
    std::vector<std::vector<int>> pairsign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                pairsign[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    (p[static_cast<size_t>(i)] + p[static_cast<size_t>(j)] > 0) ? 1 : -1;

    // i ~ j iff no element or marker lies strictly between them: same zone
    // and identical pairwise signs against every third index.
    const auto matches = [&](int i, int j) {
        if (zone[static_cast<size_t>(i)] != zone[static_cast<size_t>(j)]) return false;
        for (int m = 0; m < n; ++m) {
            if (m == i || m == j) continue;
            if (pairsign[static_cast<size_t>(i)][static_cast<size_t>(m)] !=
                pairsign[static_cast<size_t>(j)][static_cast<size_t>(m)])
                return false;
        }
        return true;
    };
    UnionFind uf(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (matches(i, j)) uf.unite(i, j);

    std::vector<std::vector<int>> classes;
    {
        std::vector<int> class_of(static_cast<size_t>(n), -1);
        for (int i = 0; i < n; ++i) {
            const int root = uf.find(i);
            if (class_of[static_cast<size_t>(root)] < 0) {
                class_of[static_cast<size_t>(root)] = static_cast<int>(classes.size());
                classes.emplace_back();
            }
            classes[static_cast<size_t>(class_of[static_cast<size_t>(root)])].push_back(i);
        }
    }
    for (const auto& cls : classes)
        for (size_t a = 0; a < cls.size(); ++a)
            for (size_t b = a + 1; b < cls.size(); ++b)
                if (!matches(cls[a], cls[b]))
                    throw std::logic_error("point_to_order: block relation is not transitive");

    // Nodes: signed block 2c+(sign==minus) for class c, then the two markers.
    const int k = static_cast<int>(classes.size());
    const int node_count = 2 * k + 2;
    const int lo_marker = 2 * k;
    const int hi_marker = 2 * k + 1;
    const auto node_zone = [&](int u) {
        if (u == lo_marker || u == hi_marker) return 0;  // unused for markers
        const int z = zone[static_cast<size_t>(classes[static_cast<size_t>(u / 2)][0])];
        return (u % 2 == 0) ? z : -z;
    };

    std::vector<std::vector<char>> less(static_cast<size_t>(node_count),
                                        std::vector<char>(static_cast<size_t>(node_count), 0));
    const auto set_less = [&](int u, int v) { less[static_cast<size_t>(u)][static_cast<size_t>(v)] = 1; };

    set_less(lo_marker, hi_marker);
    for (int u = 0; u < 2 * k; ++u) {
        const int z = node_zone(u);
        if (z < 0) {
            set_less(u, lo_marker);
            set_less(u, hi_marker);
        } else if (z == 0) {
            set_less(lo_marker, u);
            set_less(u, hi_marker);
        } else {
            set_less(lo_marker, u);
            set_less(hi_marker, u);
        }
    }

    for (int u = 0; u < 2 * k; ++u) {
        for (int v = 0; v < 2 * k; ++v) {
            if (u == v) continue;
            const int cu = u / 2, cv = v / 2;
            const bool u_minus = (u % 2 != 0), v_minus = (v % 2 != 0);
            if (node_zone(u) != node_zone(v)) {
                if (node_zone(u) < node_zone(v)) set_less(u, v);
                continue;
            }
            if (u_minus == v_minus) {
                if (cu == cv) continue;  // a block never precedes itself
                // Same sign: u < v iff some third element sits strictly
                // between a representative of u and one of v.
                for (int m = 0; m < n; ++m) {
                    const int i = classes[static_cast<size_t>(cu)][0];
                    const int j = classes[static_cast<size_t>(cv)][0];
                    if (uf.find(m) == uf.find(i) || uf.find(m) == uf.find(j)) continue;
                    const int si = pairsign[static_cast<size_t>(i)][static_cast<size_t>(m)];
                    const int sj = pairsign[static_cast<size_t>(j)][static_cast<size_t>(m)];
                    const bool between = u_minus ? (si > 0 && sj < 0) : (si < 0 && sj > 0);
                    if (between) {
                        set_less(u, v);
                        break;
                    }
                }
            } else {
                // Opposite signs: direct comparison through any admissible
                // representative pair.
                int decided = 0;
                for (int i : classes[static_cast<size_t>(cu)]) {
                    for (int j : classes[static_cast<size_t>(cv)]) {
                        if (i == j) continue;
                        const int s = pairsign[static_cast<size_t>(i)][static_cast<size_t>(j)];
                        // (C,+) before (D,-) iff x_i + x_j < 0; flipped when
                        // u is the negative block.
                        const int verdict = u_minus ? s : -s;
                        if (decided == 0) decided = verdict;
                        else if (decided != verdict)
                            throw std::logic_error("point_to_order: inconsistent block comparison");
                    }
                }
                if (decided > 0) set_less(u, v);
            }
        }
    }

    const auto close = [&]() {
        for (int w = 0; w < node_count; ++w)
            for (int u = 0; u < node_count; ++u)
                if (less[static_cast<size_t>(u)][static_cast<size_t>(w)])
                    for (int v = 0; v < node_count; ++v)
                        if (less[static_cast<size_t>(w)][static_cast<size_t>(v)]) set_less(u, v);
    };
    close();

    // The only legitimately unresolved pair is {i},{-i} for the unique index
    // strictly inside the box; the convention orders it by the sign of the
    // first block after the 1/2 marker.
    int pending = -1;
    for (int u = 0; u < 2 * k; ++u)
        for (int v = u + 1; v < 2 * k; ++v) {
            if (less[static_cast<size_t>(u)][static_cast<size_t>(v)] ||
                less[static_cast<size_t>(v)][static_cast<size_t>(u)])
                continue;
            const bool mirror_singleton =
                (u / 2 == v / 2) && classes[static_cast<size_t>(u / 2)].size() == 1;
            if (!mirror_singleton || pending >= 0)
                throw std::logic_error("point_to_order: block order is not total");
            pending = u / 2;
        }
    if (pending >= 0) {
        int first_after_half = -1;
        for (int u = 0; u < 2 * k; ++u) {
            if (!less[static_cast<size_t>(hi_marker)][static_cast<size_t>(u)]) continue;
            if (first_after_half < 0 || less[static_cast<size_t>(u)][static_cast<size_t>(first_after_half)])
                first_after_half = u;
        }
        if (first_after_half < 0)
            throw NotCanonical("point_to_order: no canonical label (middle region of BT_1)");
        // The singleton matching that sign comes second.
        const int plus_node = 2 * pending, minus_node = 2 * pending + 1;
        if (first_after_half % 2 == 0) set_less(minus_node, plus_node);
        else set_less(plus_node, minus_node);
        close();
    }

    // Ranks recover the total order.
    std::vector<int> by_rank(static_cast<size_t>(node_count), -1);
    for (int u = 0; u < node_count; ++u) {
        int r = 0;
        for (int v = 0; v < node_count; ++v)
            if (less[static_cast<size_t>(v)][static_cast<size_t>(u)]) ++r;
        if (by_rank[static_cast<size_t>(r)] != -1)
            throw std::logic_error("point_to_order: block order is not total");
        by_rank[static_cast<size_t>(r)] = u;
    }

    std::vector<int> ordered_blocks;
    int blocks_before_half = 0;
    for (int r = 0; r < node_count; ++r) {
        const int u = by_rank[static_cast<size_t>(r)];
        if (u == lo_marker) continue;
        if (u == hi_marker) {
            blocks_before_half = static_cast<int>(ordered_blocks.size());
            continue;
        }
        ordered_blocks.push_back(u);
    }

    HalfOrder h;
    for (int t = k; t < 2 * k; ++t) {
        const int u = ordered_blocks[static_cast<size_t>(t)];
        SignedBlock b;
        b.sign = (u % 2 == 0) ? Sign::Plus : Sign::Minus;
        for (int e : classes[static_cast<size_t>(u / 2)]) b.elements.push_back(e + 1);
        std::sort(b.elements.begin(), b.elements.end());
        h.blocks.push_back(std::move(b));
    }
    h.half_position = blocks_before_half - k;
    if (h.half_position < 0 || h.half_position > k)
        throw std::logic_error("point_to_order: marker landed in the first half");
    return h;
}

std::vector<std::vector<SignedBlock>> enumerate_threshold_orders(int n) {
    if (n < 2) throw std::invalid_argument("enumerate_threshold_orders: need n >= 2");
    const Mask full = (Mask{1} << n) - 1;
    std::vector<Mask> acc;
    std::vector<std::vector<SignedBlock>> out;
    for_each_partition(full, 2, acc, [&](const std::vector<Mask>& parts) {
        for (Sign s : {Sign::Plus, Sign::Minus}) {
            std::vector<SignedBlock> blocks;
            blocks.reserve(parts.size());
            for (size_t b = 0; b < parts.size(); ++b)
                blocks.push_back(SignedBlock{mask_elements(parts[b]),
                                             (b % 2 == 0) ? s : opposite(s)});
            out.push_back(std::move(blocks));
        }
    });
    return out;
}

std::vector<BigRational> threshold_order_to_point(const std::vector<SignedBlock>& blocks, int n) {
    const int found = checked_ground_set(blocks);
    if (found != n) throw std::invalid_argument("threshold_order_to_point: wrong ground set");
    std::vector<BigRational> x(static_cast<size_t>(n));
    const int den = 2 * n + 2;
    for (size_t b = 0; b < blocks.size(); ++b) {
        BigRational mag(static_cast<int>(b) + 1, den);
        if (blocks[b].sign == Sign::Minus) mag = -mag;
        for (int a : blocks[b].elements) x[static_cast<size_t>(a - 1)] = mag;
    }
    return x;
}

std::string half_order_to_json(const HalfOrder& h) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& b : h.blocks) {
        nlohmann::json jb;
        jb["elements"] = b.elements;
        jb["sign"] = b.sign == Sign::Plus ? "+" : "-";
        blocks.push_back(std::move(jb));
    }
    nlohmann::json out;
    out["blocks"] = std::move(blocks);
    out["half_position"] = h.half_position;
    return out.dump();
}

}  // namespace arratlas
