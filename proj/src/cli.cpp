#include "arratlas/cli.hpp"

#include "arratlas/arrangement.hpp"
#include "arratlas/formulas.hpp"
#include "arratlas/graphs.hpp"
#include "arratlas/oracle.hpp"
#include "arratlas/orders.hpp"
#include "arratlas/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <ostream>

namespace arratlas::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

constexpr int kInterpolationMaxN = 7;    // q^n point counting beyond this is a deliberate choice
constexpr int kEnumerationMaxN = 7;      // orders/graphs streams
constexpr int kEnumerateLinesMaxN = 6;   // enumerate subcommand default
constexpr std::uint64_t kOracleMaxPoints = 100'000'000;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int default_jobs() {
    if (const char* env = std::getenv("ARRATLAS_JOBS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

FamilyId parse_family(const std::string& s) {
    if (s == "threshold") return FamilyId::Threshold;
    if (s == "boxed") return FamilyId::BoxedThreshold;
    throw UsageError("--family must be 'threshold' or 'boxed'");
}

TypeCSubarrangement family_arrangement(FamilyId family, int n) {
    return family == FamilyId::Threshold ? threshold_arrangement(n)
                                         : box(threshold_arrangement(n));
}

BigInt count_via_formula(FamilyId family, int n) {
    if (family == FamilyId::Threshold) return regions_threshold(n);
    if (n == 0) return 1;  // a point, one region
    if (n == 1) return 3;  // the two walls on a line
    return regions_boxed(n);
}

BigInt count_via_zaslavsky(FamilyId family, int n, int q0, int jobs, int cap) {
    if (n > cap)
        throw UsageError("zaslavsky method capped at n <= " + std::to_string(cap) +
                         " (q^n point counting); use --cap-override to raise");
    const Polynomial chi = char_poly(family_arrangement(family, n), q0, jobs);
    const BigInt v = poly_eval(chi, BigInt(-1));
    return n % 2 == 0 ? v : BigInt(-v);
}

BigInt count_via_orders(FamilyId family, int n, int cap) {
    if (n > cap)
        throw UsageError("orders method capped at n <= " + std::to_string(cap) +
                         "; use --cap-override to raise");
    if (n == 1) return family == FamilyId::Threshold ? 1 : 3;
    if (family == FamilyId::Threshold)
        return BigInt(enumerate_threshold_orders(n).size());
    BigInt count = 0;
    for_each_half_order(n, [&](const HalfOrder&) { ++count; });
    return count;
}

BigInt count_via_graphs(FamilyId family, int n, int cap) {
    if (n > cap)
        throw UsageError("graphs method capped at n <= " + std::to_string(cap) +
                         "; use --cap-override to raise");
    BigInt count = 0;
    if (family == FamilyId::Threshold)
        for_each_threshold_graph(n, [&](const LabeledGraph&) { ++count; });
    else
        for_each_colored(n, [&](const ColoredThresholdGraph&) { ++count; });
    return count;
}

BigInt count_via_oracle(FamilyId family, int n, int jobs, std::uint64_t max_points) {
    return BigInt(enumerate_regions(family_arrangement(family, n), jobs, max_points).size());
}

BigInt count_via_egf(FamilyId family, int n) {
    if (family != FamilyId::BoxedThreshold)
        throw UsageError("egf method is defined for --family boxed only");
    return regions_boxed_via_egf(n).at(static_cast<size_t>(n));
}

void emit_checks(const std::vector<CheckResult>& checks, std::ostream& out, int& failures) {
    for (const auto& c : checks) {
        nlohmann::json line;
        line["suite"] = c.suite;
        line["check"] = c.name;
        line["ok"] = c.ok;
        if (!c.ok) {
            line["detail"] = c.detail;
            ++failures;
        }
        out << line.dump() << "\n";
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact region counting and enumeration for threshold and boxed "
                 "threshold arrangements"};
    app.require_subcommand(1);

    std::string family_str = "boxed";
    std::string method;
    std::string format = "csv";
    std::string what;
    std::string suite;
    int n = -1;
    int n_max = -1;
    int q0 = 0;
    int jobs = default_jobs();
    int trials = 20;
    long long cap_override = -1;

    auto* chi_cmd = app.add_subcommand("chi", "Characteristic polynomial of T_n or BT_n as JSON");
    chi_cmd->add_option("--family", family_str, "threshold | boxed")->capture_default_str();
    chi_cmd->add_option("--n", n, "dimension (n >= 1)")->required();
    std::string chi_method = "formula";
    chi_cmd->add_option("--method", chi_method, "formula | interpolate")->capture_default_str();
    chi_cmd->add_option("--q0", q0, "first sampling modulus (odd; default 2n+3)");
    chi_cmd->add_option("--jobs", jobs, "worker threads for point counting");
    chi_cmd->add_option("--cap-override", cap_override, "raise the interpolation dimension cap");

    auto* count_cmd = app.add_subcommand("count", "Region count by any route");
    count_cmd->add_option("--family", family_str, "threshold | boxed")->capture_default_str();
    count_cmd->add_option("--n", n, "dimension")->required();
    count_cmd->add_option("--method", method, "formula | zaslavsky | egf | orders | graphs | oracle")
        ->required();
    count_cmd->add_option("--q0", q0, "first sampling modulus for zaslavsky");
    count_cmd->add_option("--jobs", jobs, "worker threads");
    count_cmd->add_option("--cap-override", cap_override,
                          "raise a method cap (max n, or max points for oracle)");

    auto* table_cmd = app.add_subcommand("table", "Reference table rows (n, chi coefficients, regions)");
    table_cmd->add_option("--n-max", n_max, "last row (2..12)")->required();
    table_cmd->add_option("--format", format, "csv | json")->capture_default_str();

    auto* enum_cmd = app.add_subcommand("enumerate", "Stream region labels as JSON lines");
    enum_cmd->add_option("--what", what, "orders | graphs")->required();
    enum_cmd->add_option("--n", n, "dimension")->required();
    enum_cmd->add_option("--cap-override", cap_override, "raise the enumeration dimension cap");

    auto* verify_cmd = app.add_subcommand("verify", "Cross-validation suites; exit 1 on mismatch");
    verify_cmd->add_option("--suite", suite, "table1 | shift | bijection | coefficients | egf | eulerian")
        ->required();
    verify_cmd->add_option("--n-max", n_max, "suite-specific range end");
    verify_cmd->add_option("--trials", trials, "random arrangements per dimension (shift suite)");
    verify_cmd->add_option("--jobs", jobs, "worker threads");

    std::vector<const char*> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.push_back("arratlas");
    for (const auto& a : args) argv_store.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv_store.size()), argv_store.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        const FamilyId family = parse_family(family_str);

        if (chi_cmd->parsed()) {
            if (n < 1) throw UsageError("chi: need --n >= 1");
            Polynomial chi;
            if (chi_method == "formula") {
                chi = family == FamilyId::Threshold ? chi_threshold(n) : chi_boxed_threshold(n);
            } else if (chi_method == "interpolate") {
                const int cap = cap_override > 0 ? static_cast<int>(cap_override) : kInterpolationMaxN;
                if (n > cap)
                    throw UsageError("chi --method interpolate capped at n <= " + std::to_string(cap) +
                                     "; use --cap-override to raise");
                chi = char_poly(family_arrangement(family, n), q0, jobs);
            } else {
                throw UsageError("chi: unknown --method '" + chi_method + "'");
            }
            out << polynomial_to_json(chi) << "\n";
            return kExitOk;
        }

        if (count_cmd->parsed()) {
            if (n < 0) throw UsageError("count: need --n >= 0");
            BigInt result;
            if (method == "formula") {
                result = count_via_formula(family, n);
            } else if (method == "zaslavsky") {
                const int cap = cap_override > 0 ? static_cast<int>(cap_override) : kInterpolationMaxN;
                result = count_via_zaslavsky(family, n, q0, jobs, cap);
            } else if (method == "egf") {
                result = count_via_egf(family, n);
            } else if (method == "orders") {
                if (n < 1) throw UsageError("orders method needs --n >= 1");
                const int cap = cap_override > 0 ? static_cast<int>(cap_override) : kEnumerationMaxN;
                result = count_via_orders(family, n, cap);
            } else if (method == "graphs") {
                if (n < 1) throw UsageError("graphs method needs --n >= 1");
                const int cap = cap_override > 0 ? static_cast<int>(cap_override) : kEnumerationMaxN;
                result = count_via_graphs(family, n, cap);
            } else if (method == "oracle") {
                if (n < 1) throw UsageError("oracle method needs --n >= 1");
                const std::uint64_t cap =
                    cap_override > 0 ? static_cast<std::uint64_t>(cap_override) : kOracleMaxPoints;
                result = count_via_oracle(family, n, jobs, cap);
            } else {
                throw UsageError("count: unknown --method '" + method + "'");
            }
            out << result.str() << "\n";
            return kExitOk;
        }

        if (table_cmd->parsed()) {
            if (n_max < 2 || n_max > 12) throw UsageError("table: need 2 <= --n-max <= 12");
            if (format == "csv") {
                out << "n,coeffs,regions\n";
                for (int m = 2; m <= n_max; ++m) {
                    out << m << ",";
                    const Polynomial chi = chi_boxed_threshold(m);
                    const auto& cs = chi.coeffs();
                    for (size_t k = 0; k < cs.size(); ++k) out << (k ? " " : "") << cs[k].str();
                    out << "," << regions_boxed(m).str() << "\n";
                }
            } else if (format == "json") {
                nlohmann::json rows = nlohmann::json::array();
                for (int m = 2; m <= n_max; ++m) {
                    nlohmann::json r;
                    r["n"] = m;
                    const Polynomial chi = chi_boxed_threshold(m);
                    nlohmann::json coeffs = nlohmann::json::array();
                    for (const auto& c : chi.coeffs()) coeffs.push_back(c.str());
                    r["coeffs"] = std::move(coeffs);
                    r["regions"] = regions_boxed(m).str();
                    rows.push_back(std::move(r));
                }
                out << rows.dump() << "\n";
            } else {
                throw UsageError("table: unknown --format '" + format + "'");
            }
            return kExitOk;
        }

        if (enum_cmd->parsed()) {
            const int cap = cap_override > 0 ? static_cast<int>(cap_override) : kEnumerateLinesMaxN;
            if (n < 1 || n > cap)
                throw UsageError("enumerate capped at 1 <= n <= " + std::to_string(cap) +
                                 "; use --cap-override to raise");
            if (what == "orders") {
                if (n < 2) throw UsageError("enumerate --what orders needs n >= 2");
                for_each_half_order(n, [&](const HalfOrder& h) { out << half_order_to_json(h) << "\n"; });
            } else if (what == "graphs") {
                for_each_colored(n, [&](const ColoredThresholdGraph& g) {
                    out << graph_to_json(g) << "\n";
                });
            } else {
                throw UsageError("enumerate: unknown --what '" + what + "'");
            }
            return kExitOk;
        }

        if (verify_cmd->parsed()) {
            std::vector<CheckResult> checks;
            if (suite == "table1") checks = verify_table1(n_max > 0 ? n_max : 10);
            else if (suite == "shift") checks = verify_shift(n_max > 0 ? n_max : 4, trials, 20240803, jobs);
            else if (suite == "bijection") checks = verify_bijection(n_max > 0 ? n_max : 4, jobs);
            else if (suite == "coefficients") checks = verify_coefficients(n_max > 0 ? n_max : 8);
            else if (suite == "egf") checks = verify_egf(n_max > 0 ? n_max : 8);
            else if (suite == "eulerian") checks = verify_eulerian(n_max > 0 ? n_max : 12);
            else throw UsageError("verify: unknown --suite '" + suite + "'");

            int failures = 0;
            emit_checks(checks, out, failures);
            nlohmann::json summary;
            summary["suite"] = suite;
            summary["checks"] = checks.size();
            summary["failures"] = failures;
            out << summary.dump() << "\n";
            return failures == 0 ? kExitOk : kExitMismatch;
        }

        throw UsageError("no subcommand given");
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const VerificationModulusMismatch& e) {
        err << "error: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const SearchSpaceTooLarge& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainTooSmall& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitMismatch;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    args.reserve(static_cast<size_t>(argc > 0 ? argc - 1 : 0));
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace arratlas::cli
