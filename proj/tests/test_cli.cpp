#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arratlas/cli.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = arratlas::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

size_t line_count(const std::string& s) {
    size_t lines = 0;
    for (char c : s)
        if (c == '\n') ++lines;
    return lines;
}

}  // namespace

TEST_CASE("count via each route") {
    CHECK(run({"count", "--family", "boxed", "--n", "10", "--method", "formula"}).out == "1137563980\n");
    CHECK(run({"count", "--family", "threshold", "--n", "4", "--method", "oracle"}).out == "46\n");
    CHECK(run({"count", "--family", "boxed", "--n", "3", "--method", "graphs"}).out == "64\n");
    CHECK(run({"count", "--family", "boxed", "--n", "3", "--method", "orders"}).out == "64\n");
    CHECK(run({"count", "--family", "boxed", "--n", "4", "--method", "egf"}).out == "436\n");
    CHECK(run({"count", "--family", "boxed", "--n", "3", "--method", "zaslavsky"}).out == "64\n");
    CHECK(run({"count", "--family", "threshold", "--n", "5", "--method", "formula"}).out == "332\n");
}

TEST_CASE("count edge conventions") {
    CHECK(run({"count", "--family", "boxed", "--n", "0", "--method", "formula"}).out == "1\n");
    CHECK(run({"count", "--family", "boxed", "--n", "1", "--method", "formula"}).out == "3\n");
    CHECK(run({"count", "--family", "boxed", "--n", "1", "--method", "egf"}).out == "3\n");
    CHECK(run({"count", "--family", "threshold", "--n", "1", "--method", "formula"}).out == "1\n");
    CHECK(run({"count", "--family", "boxed", "--n", "1", "--method", "graphs"}).out == "3\n");
    CHECK(run({"count", "--family", "boxed", "--n", "1", "--method", "oracle"}).out == "3\n");
}

TEST_CASE("count argument errors exit 2") {
    CHECK(run({"count", "--family", "boxed", "--n", "8", "--method", "oracle"}).code == 2);
    CHECK(run({"count", "--family", "threshold", "--n", "3", "--method", "egf"}).code == 2);
    CHECK(run({"count", "--family", "nope", "--n", "3", "--method", "formula"}).code == 2);
    CHECK(run({"count", "--family", "boxed", "--n", "9", "--method", "zaslavsky"}).code == 2);
    const CliResult capped = run({"count", "--family", "boxed", "--n", "8", "--method", "orders"});
    CHECK(capped.code == 2);
    CHECK(capped.err.find("n <= 7") != std::string::npos);
}

TEST_CASE("chi subcommand") {
    CHECK(run({"chi", "--family", "boxed", "--n", "2", "--method", "formula"}).out ==
          "{\"coeffs\":[\"6\",\"-5\",\"1\"]}\n");
    CHECK(run({"chi", "--family", "threshold", "--n", "1"}).out == "{\"coeffs\":[\"0\",\"1\"]}\n");
    const CliResult formula = run({"chi", "--family", "boxed", "--n", "5", "--method", "formula"});
    const CliResult interp = run({"chi", "--family", "boxed", "--n", "5", "--method", "interpolate"});
    CHECK(formula.code == 0);
    CHECK(interp.code == 0);
    CHECK(formula.out == interp.out);
    CHECK(run({"chi", "--family", "boxed", "--n", "8", "--method", "interpolate"}).code == 2);
    CHECK(run({"chi", "--family", "boxed", "--n", "0"}).code == 2);
}

TEST_CASE("table") {
    const CliResult small = run({"table", "--n-max", "2"});
    CHECK(small.code == 0);
    CHECK(small.out == "n,coeffs,regions\n2,6 -5 1,12\n");
    const CliResult full = run({"table", "--n-max", "10"});
    CHECK(line_count(full.out) == 10);  // header + 9 rows
    CHECK(full.out.find("1137563980") != std::string::npos);
    const CliResult js = run({"table", "--n-max", "3", "--format", "json"});
    CHECK(js.out.find("\"regions\":\"64\"") != std::string::npos);
    CHECK(run({"table", "--n-max", "13"}).code == 2);
    CHECK(run({"table", "--n-max", "1"}).code == 2);
    // Extending past the reference range works by formula.
    const CliResult extended = run({"table", "--n-max", "12"});
    CHECK(extended.code == 0);
    CHECK(line_count(extended.out) == 12);
}

TEST_CASE("enumerate") {
    const CliResult orders = run({"enumerate", "--what", "orders", "--n", "2"});
    CHECK(orders.code == 0);
    CHECK(line_count(orders.out) == 12);
    const CliResult graphs = run({"enumerate", "--what", "graphs", "--n", "2"});
    CHECK(graphs.code == 0);
    CHECK(line_count(graphs.out) == 12);
    CHECK(line_count(run({"enumerate", "--what", "orders", "--n", "4"}).out) == 436);
    CHECK(line_count(run({"enumerate", "--what", "graphs", "--n", "4"}).out) == 436);
    CHECK(run({"enumerate", "--what", "orders", "--n", "7"}).code == 2);
    CHECK(run({"enumerate", "--what", "graphs", "--n", "7", "--cap-override", "7"}).code == 0);

    // Byte-stable across runs.
    CHECK(run({"enumerate", "--what", "graphs", "--n", "3"}).out ==
          run({"enumerate", "--what", "graphs", "--n", "3"}).out);
}

TEST_CASE("verify suites") {
    for (const std::string suite : {"table1", "eulerian", "coefficients", "egf"}) {
        const CliResult r = run({"verify", "--suite", suite});
        CHECK(r.code == 0);
        CHECK(r.out.find("\"failures\":0") != std::string::npos);
    }
    const CliResult shift = run({"verify", "--suite", "shift", "--n-max", "3", "--trials", "5"});
    CHECK(shift.code == 0);
    const CliResult bij = run({"verify", "--suite", "bijection", "--n-max", "3"});
    CHECK(bij.code == 0);
    CHECK(run({"verify", "--suite", "unknown"}).code == 2);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"count", "--n", "3"}).code == 2);  // missing required --method
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("ARRATLAS_JOBS feeds the default job count") {
    setenv("ARRATLAS_JOBS", "3", 1);
    CHECK(run({"count", "--family", "boxed", "--n", "3", "--method", "oracle"}).out == "64\n");
    setenv("ARRATLAS_JOBS", "not-a-number", 1);
    CHECK(run({"count", "--family", "boxed", "--n", "3", "--method", "oracle"}).out == "64\n");
    unsetenv("ARRATLAS_JOBS");
}

TEST_CASE("all defined count methods agree") {
    for (const std::string family : {"threshold", "boxed"}) {
        for (int n = 2; n <= 3; ++n) {
            std::vector<std::string> methods = {"formula", "zaslavsky", "orders", "graphs", "oracle"};
            if (family == "boxed") methods.push_back("egf");
            std::string first;
            for (const auto& m : methods) {
                const CliResult r =
                    run({"count", "--family", family, "--n", std::to_string(n), "--method", m});
                CHECK(r.code == 0);
                if (first.empty()) first = r.out;
                else CHECK(r.out == first);
            }
        }
    }
}
