// Acceptance suite: every cross-validation gate of the project, one line of
// output per criterion. Exit code is the number of failed criteria.
//
//   ./acceptance [--include-n6] [--jobs J]
//
// --include-n6 extends the finite-field/formula comparison to n = 6 (a few
// hundred million points; off by default).

#include "arratlas/arrangement.hpp"
#include "arratlas/combinat.hpp"
#include "arratlas/formulas.hpp"
#include "arratlas/graphs.hpp"
#include "arratlas/oracle.hpp"
#include "arratlas/orders.hpp"
#include "arratlas/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace arratlas;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& detail,
            double seconds) {
    std::ostringstream line;
    line << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << criterion << ": " << what << " ("
         << seconds << "s)";
    if (!ok && !detail.empty()) line << "\n       " << detail;
    std::cout << line.str() << std::endl;
    if (!ok) ++failures;
}

template <typename Fn>
void criterion(int number, const std::string& what, Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        detail = fn(ok);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(number, what, ok, detail, seconds);
}

std::string from_checks(const std::vector<CheckResult>& checks, bool& ok) {
    ok = true;
    std::string detail;
    for (const auto& c : checks) {
        if (!c.ok) {
            ok = false;
            detail += c.suite + "/" + c.name + ": " + c.detail + "; ";
        }
    }
    return detail;
}

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

}  // namespace

int main(int argc, char** argv) {
    bool include_n6 = false;
    int jobs = 2;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--include-n6") == 0) include_n6 = true;
        if (std::strcmp(argv[i], "--jobs") == 0 && i + 1 < argc) jobs = std::atoi(argv[i + 1]);
    }

    criterion(1, "closed forms reproduce the reference table for n = 2..10", [&](bool& ok) {
        return from_checks(verify_table1(10), ok);
    });

    criterion(2, std::string("interpolated char_poly(BT_n) equals the closed form, n = 2..") +
                     (include_n6 ? "6" : "5"),
              [&](bool& ok) {
                  ok = true;
                  std::string detail;
                  const int top = include_n6 ? 6 : 5;
                  for (int n = 2; n <= top; ++n) {
                      const Polynomial sampled = char_poly(box(threshold_arrangement(n)), 0, jobs);
                      const Polynomial closed = chi_boxed_threshold(n);
                      if (sampled != closed) {
                          ok = false;
                          detail += "n=" + std::to_string(n) + ": " + sampled.to_string() +
                                    " != " + closed.to_string() + "; ";
                      }
                  }
                  return detail;
              });

    criterion(3, "shift law on 20 random type-C sub-arrangements per n in {2,3,4}", [&](bool& ok) {
        return from_checks(verify_shift(4, 20, 20240803, jobs), ok);
    });

    criterion(4, "oracle counts: T_n = 2,8,46,332 (n=2..5); BT_n = 12,64,436 (n=2..4)",
              [&](bool& ok) {
                  ok = true;
                  std::string detail;
                  const std::vector<std::pair<int, long long>> threshold_expect = {
                      {2, 2}, {3, 8}, {4, 46}, {5, 332}};
                  for (auto [n, expected] : threshold_expect) {
                      const auto got = enumerate_regions(threshold_arrangement(n), jobs).size();
                      if (got != static_cast<size_t>(expected)) {
                          ok = false;
                          detail += "T_" + std::to_string(n) + ": got " + std::to_string(got) + "; ";
                      }
                  }
                  const std::vector<std::pair<int, long long>> boxed_expect = {
                      {2, 12}, {3, 64}, {4, 436}};
                  for (auto [n, expected] : boxed_expect) {
                      const auto got = enumerate_regions(box(threshold_arrangement(n)), jobs).size();
                      if (got != static_cast<size_t>(expected)) {
                          ok = false;
                          detail += "BT_" + std::to_string(n) + ": got " + std::to_string(got) + "; ";
                      }
                  }
                  return detail;
              });

    criterion(5, "order and graph pipelines are perfect bijections onto the oracle, n = 2..4",
              [&](bool& ok) { return from_checks(verify_bijection(4, jobs), ok); });

    criterion(6, "form sub-counts match the closed forms and total r(BT_n)", [&](bool& ok) {
        ok = true;
        std::string detail;
        SequenceTable t;
        for (int n = 2; n <= 7; ++n) {
            const FormCounts c = count_by_form(n);
            // The four closed forms, evaluated directly.
            const BigInt f1 = 2 * t.ordered_bell(n);
            const BigInt f2a = 2 * (t.ordered_bell(n) - BigInt(n) * t.ordered_bell(n - 1));
            BigInt f2b = 0;
            for (int k = 1; k <= n; ++k)
                f2b += BigInt(4) * (t.factorial(k) - t.factorial(k - 1)) *
                       (BigInt(k) * t.stirling2(n, k) - BigInt(n) * t.stirling2(n - 1, k - 1));
            const BigInt f3 = 2 * BigInt(n) * t.ordered_bell(n - 1);
            if (c.form1 != f1 || c.form2a != f2a || c.form2b != f2b || c.form3 != f3 ||
                c.total() != regions_boxed(n)) {
                ok = false;
                detail += "n=" + std::to_string(n) + " closed-form mismatch; ";
            }
        }
        for (int n = 2; n <= 5; ++n) {
            const FormCounts c = count_by_form(n);
            BigInt f1 = 0, f2a = 0, f2b = 0, f3 = 0;
            for_each_half_order(n, [&](const HalfOrder& h) {
                switch (classify_form(h)) {
                    case FormTag::Form1: ++f1; break;
                    case FormTag::Form2:
                        if (h.half_position == static_cast<int>(h.blocks.size())) ++f2a;
                        else ++f2b;
                        break;
                    case FormTag::Form3: ++f3; break;
                }
            });
            if (f1 != c.form1 || f2a != c.form2a || f2b != c.form2b || f3 != c.form3) {
                ok = false;
                detail += "n=" + std::to_string(n) + " enumeration bins diverge; ";
            }
        }
        return detail;
    });

    criterion(7, "both EGF routes agree with the closed forms", [&](bool& ok) {
        return from_checks(verify_egf(8), ok);
    });

    criterion(8, "Eulerian identity for r(T_n), n = 2..12", [&](bool& ok) {
        return from_checks(verify_eulerian(12), ok);
    });

    criterion(9, "coefficient formulas and the signed partial-sum relation, n,k <= 8",
              [&](bool& ok) { return from_checks(verify_coefficients(8), ok); });

    criterion(10, "codec invariances on 1000 random signed permutations per n = 1..6",
              [&](bool& ok) {
                  ok = true;
                  std::string detail;
                  std::mt19937_64 rng(424242);
                  for (int n = 1; n <= 6 && ok; ++n) {
                      for (int trial = 0; trial < 1000; ++trial) {
                          SignedPermutation sp = random_sp(rng, n, trial % 2 == 1);
                          // (a) first-entry sign flip, marker not before it
                          SignedPermutation flipped = sp;
                          if (flipped.half_marker && *flipped.half_marker == 0)
                              flipped.half_marker = sp.half_marker = 1;
                          flipped.entries[0] = -flipped.entries[0];
                          if (!(decode(sp) == decode(flipped))) {
                              ok = false;
                              detail = "first-sign flip changed the graph at n=" + std::to_string(n);
                              break;
                          }
                          // (b) reorder within a constant-sign, marker-delimited run
                          SignedPermutation shuffled = sp;
                          const int marker = sp.half_marker.value_or(n);
                          int start = 0;
                          for (int i = 1; i <= n; ++i) {
                              const bool cut =
                                  i == n || i == marker ||
                                  (sp.entries[static_cast<size_t>(i)] > 0) !=
                                      (sp.entries[static_cast<size_t>(i - 1)] > 0);
                              if (cut) {
                                  std::shuffle(shuffled.entries.begin() + start,
                                               shuffled.entries.begin() + i, rng);
                                  start = i;
                              }
                          }
                          if (!(decode(sp) == decode(shuffled))) {
                              ok = false;
                              detail = "in-run reorder changed the graph at n=" + std::to_string(n);
                              break;
                          }
                          // peel o decode lands on the canonical partition
                          SignedPermutation plain{sp.entries, std::nullopt};
                          if (peel(decode_graph(plain)) != canonical_partition(plain)) {
                              ok = false;
                              detail = "peel(decode) missed the canonical form at n=" + std::to_string(n);
                              break;
                          }
                      }
                  }
                  return detail;
              });

    std::cout << (failures == 0 ? "acceptance: all criteria passed"
                                : "acceptance: " + std::to_string(failures) + " criterion(s) failed")
              << std::endl;
    return failures;
}
