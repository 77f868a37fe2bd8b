#include "arratlas/verify.hpp"

#include "arratlas/arrangement.hpp"
#include "arratlas/combinat.hpp"
#include "arratlas/formulas.hpp"
#include "arratlas/graphs.hpp"
#include "arratlas/oracle.hpp"
#include "arratlas/orders.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace arratlas {

namespace {

ReferenceRow row(int n, std::vector<long long> ascending, long long regions) {
    ReferenceRow r;
    r.n = n;
    for (long long c : ascending) r.coeffs.emplace_back(c);
    r.regions = regions;
    return r;
}

CheckResult check(std::string suite, std::string name, bool ok, std::string detail = "") {
    return CheckResult{std::move(suite), std::move(name), ok, ok ? "" : std::move(detail)};
}

template <typename T>
std::string expect_str(const T& expected, const T& actual) {
    std::ostringstream os;
    os << "expected " << expected << ", got " << actual;
    return os.str();
}

}  // namespace

const std::vector<ReferenceRow>& reference_table() {
    static const std::vector<ReferenceRow> table = {
        row(2, {6, -5, 1}, 12),
        row(3, {-27, 27, -9, 1}, 64),
        row(4, {165, -181, 75, -14, 1}, 436),
        row(5, {-1263, 1480, -695, 165, -20, 1}, 3624),
        row(6, {11559, -14284, 7320, -2010, 315, -27, 1}, 35516),
        row(7, {-122874, 158753, -87010, 26460, -4865, 546, -35, 1}, 400544),
        row(8, {1486578, -1995487, 1154965, -379666, 78155, -10402, 882, -44, 1}, 5106180),
        row(9, {-20158695, 27979203, -16952157, 5932143, -1331022, 200025, -20286, 1350, -54, 1},
            72574936),
        row(10,
            {302751327, -432836011, 272771475, -100548090, 24172575, -3986031, 459585, -36840, 1980,
             -65, 1},
            1137563980),
    };
    return table;
}

std::vector<CheckResult> verify_table1(int n_max) {
    std::vector<CheckResult> out;
    for (const auto& ref : reference_table()) {
        if (ref.n > n_max) break;
        const Polynomial chi = chi_boxed_threshold(ref.n);
        const Polynomial expected(ref.coeffs);
        out.push_back(check("table1", "chi_BT_" + std::to_string(ref.n), chi == expected,
                            expect_str(expected.to_string(), chi.to_string())));
        const BigInt r = regions_boxed(ref.n);
        out.push_back(check("table1", "r_BT_" + std::to_string(ref.n), r == ref.regions,
                            expect_str(ref.regions, r)));
        const BigInt r_zas = ref.n % 2 == 0 ? poly_eval(chi, BigInt(-1)) : BigInt(-poly_eval(chi, BigInt(-1)));
        out.push_back(check("table1", "zaslavsky_BT_" + std::to_string(ref.n), r_zas == ref.regions,
                            expect_str(ref.regions, r_zas)));
    }
    return out;
}

std::vector<CheckResult> verify_shift(int n_max, int trials, std::uint64_t seed, int jobs) {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(seed);
    for (int n = 2; n <= n_max; ++n) {
        std::bernoulli_distribution coin(0.5);
        for (int t = 0; t < trials; ++t) {
            TypeCSubarrangement arr(n);
            for (int i = 1; i <= n; ++i) {
                for (int j = i + 1; j <= n; ++j) {
                    if (coin(rng)) arr.add(Hyperplane::sum_zero(i, j));
                    if (coin(rng)) arr.add(Hyperplane::diff_zero(i, j));
                }
                if (coin(rng)) arr.add(Hyperplane::coord_zero(i));
            }
            const Polynomial chi = char_poly(arr, 0, jobs);
            const Polynomial chi_boxed = char_poly(box(arr), 0, jobs);
            const Polynomial shifted = poly_shift(chi, BigInt(2));
            out.push_back(check("shift",
                                "n=" + std::to_string(n) + " trial=" + std::to_string(t) + " |A|=" +
                                    std::to_string(arr.size()),
                                chi_boxed == shifted,
                                expect_str(shifted.to_string(), chi_boxed.to_string())));
        }
    }
    return out;
}

std::vector<CheckResult> verify_bijection(int n_max, int jobs) {
    std::vector<CheckResult> out;
    for (int n = 2; n <= n_max; ++n) {
        const TypeCSubarrangement boxed = box(threshold_arrangement(n));
        const auto boxed_oracle = enumerate_regions(boxed, jobs);

        std::vector<SignVector> order_labels;
        for_each_half_order(n, [&](const HalfOrder& h) {
            order_labels.push_back(point_sign_vector(boxed, order_to_point(h)));
        });
        Report r = compare_with_set(boxed_oracle, order_labels);
        out.push_back(check("bijection", "orders_vs_oracle_BT_" + std::to_string(n), r.ok(),
                            report_to_json(r)));

        std::vector<SignVector> graph_labels;
        for_each_colored(n, [&](const ColoredThresholdGraph& g) {
            graph_labels.push_back(graph_to_region(g));
        });
        r = compare_with_set(boxed_oracle, graph_labels);
        out.push_back(check("bijection", "graphs_vs_oracle_BT_" + std::to_string(n), r.ok(),
                            report_to_json(r)));

        const TypeCSubarrangement thresh = threshold_arrangement(n);
        const auto thresh_oracle = enumerate_regions(thresh, jobs);

        std::vector<SignVector> torder_labels;
        for (const auto& blocks : enumerate_threshold_orders(n))
            torder_labels.push_back(point_sign_vector(thresh, threshold_order_to_point(blocks, n)));
        r = compare_with_set(thresh_oracle, torder_labels);
        out.push_back(check("bijection", "orders_vs_oracle_T_" + std::to_string(n), r.ok(),
                            report_to_json(r)));

        std::vector<SignVector> tgraph_labels;
        for_each_threshold_graph(n, [&](const LabeledGraph& g) {
            tgraph_labels.push_back(threshold_region_dictionary(g));
        });
        r = compare_with_set(thresh_oracle, tgraph_labels);
        out.push_back(check("bijection", "graphs_vs_oracle_T_" + std::to_string(n), r.ok(),
                            report_to_json(r)));
    }
    return out;
}

std::vector<CheckResult> verify_coefficients(int n_max) {
    std::vector<CheckResult> out;
    for (int n = 1; n <= n_max; ++n) {
        for (FamilyId family : {FamilyId::Threshold, FamilyId::BoxedThreshold}) {
            const Polynomial chi =
                family == FamilyId::Threshold ? chi_threshold(n) : chi_boxed_threshold(n);
            bool all = true;
            std::string detail;
            for (int j = 0; j <= n; ++j) {
                const BigInt via_tables = chi_coefficient(family, n, j);
                const BigInt expanded = chi.coefficient(j);
                if (via_tables != expanded) {
                    all = false;
                    detail = "j=" + std::to_string(j) + ": " + expect_str(expanded, via_tables);
                    break;
                }
            }
            out.push_back(check("coefficients",
                                std::string(family == FamilyId::Threshold ? "T_" : "BT_") +
                                    std::to_string(n),
                                all, std::move(detail)));
        }
    }
    // Signed partial-sum relation: b(k,j) = -sum_{i<=j} c(k+1,i) where
    // c(k+1,i) is the signed coefficient of t^i in (t-1)(t-3)...(t-(2k+1)).
    for (int k = 0; k <= n_max; ++k) {
        std::vector<BigInt> odd_roots;
        for (int i = 1; i <= k + 1; ++i) odd_roots.emplace_back(2 * i - 1);
        const Polynomial chain = poly_product_chain(odd_roots);
        const std::vector<BigInt> b = boxed_coeffs(k);
        bool all = true;
        std::string detail;
        BigInt partial = 0;
        for (int j = 0; j <= k; ++j) {
            partial += chain.coefficient(j);
            if (b[static_cast<size_t>(j)] != -partial) {
                all = false;
                detail = "j=" + std::to_string(j) + ": " + expect_str(BigInt(-partial), b[static_cast<size_t>(j)]);
                break;
            }
        }
        out.push_back(check("coefficients", "b_partial_sum_k=" + std::to_string(k), all,
                            std::move(detail)));
    }
    return out;
}

std::vector<CheckResult> verify_egf(int n_max) {
    std::vector<CheckResult> out;
    const auto regions = regions_boxed_via_egf(n_max);
    out.push_back(check("egf", "regions_n=0", regions.at(0) == 1, expect_str(BigInt(1), regions.at(0))));
    if (n_max >= 1)
        out.push_back(check("egf", "regions_n=1", regions.at(1) == 3, expect_str(BigInt(3), regions.at(1))));
    for (int n = 2; n <= n_max; ++n) {
        const BigInt expected = regions_boxed(n);
        out.push_back(check("egf", "regions_n=" + std::to_string(n),
                            regions.at(static_cast<size_t>(n)) == expected,
                            expect_str(expected, regions.at(static_cast<size_t>(n)))));
    }
    const int chi_max = std::min(n_max, 6);
    for (int t : {3, 5, 7}) {
        const auto chi_vals = chi_boxed_via_egf(t, chi_max);
        bool all = chi_vals.at(0) == 1;
        std::string detail = all ? "" : "n=0: " + expect_str(BigInt(1), chi_vals.at(0));
        for (int n = 1; all && n <= chi_max; ++n) {
            const BigInt expected = poly_eval(chi_boxed_threshold(n), BigInt(t));
            if (chi_vals.at(static_cast<size_t>(n)) != expected) {
                all = false;
                detail = "n=" + std::to_string(n) + ": " +
                         expect_str(expected, chi_vals.at(static_cast<size_t>(n)));
            }
        }
        out.push_back(check("egf", "chi_at_t=" + std::to_string(t), all, std::move(detail)));
    }
    return out;
}

std::vector<CheckResult> verify_eulerian(int n_max) {
    std::vector<CheckResult> out;
    for (int n = 2; n <= n_max; ++n) {
        const BigInt via_eulerian = regions_threshold_eulerian(n);
        const BigInt via_bell = regions_threshold(n);
        out.push_back(check("eulerian", "n=" + std::to_string(n), via_eulerian == via_bell,
                            expect_str(via_bell, via_eulerian)));
    }
    return out;
}

}  // namespace arratlas
