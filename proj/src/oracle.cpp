#include "arratlas/oracle.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <thread>
#include <unordered_set>

namespace arratlas {

SignVector point_sign_vector(const TypeCSubarrangement& arr, const std::vector<BigRational>& point) {
    if (static_cast<int>(point.size()) != arr.dimension())
        throw std::invalid_argument("point_sign_vector: wrong point dimension");
    const BigRational half(1, 2);
    SignVector sv;
    sv.reserve(arr.size());
    for (const auto& h : arr.hyperplanes()) {
        BigRational f;
        const BigRational& xi = point[static_cast<size_t>(h.i - 1)];
        switch (h.kind) {
            case Hyperplane::Kind::SumZero: f = xi + point[static_cast<size_t>(h.j - 1)]; break;
            case Hyperplane::Kind::DiffZero: f = xi - point[static_cast<size_t>(h.j - 1)]; break;
            case Hyperplane::Kind::CoordZero: f = xi; break;
            case Hyperplane::Kind::BoxLow: f = xi + half; break;
            case Hyperplane::Kind::BoxHigh: f = xi - half; break;
        }
        if (f == 0) throw PointOnHyperplane("point_sign_vector: point lies on " + h.to_string());
        sv.push_back(f > 0 ? 1 : -1);
    }
    return sv;
}

GenericLattice build_lattice(int n) {
    if (n < 1) throw std::invalid_argument("build_lattice: need n >= 1");
    const int den = 2 * n + 2;
    GenericLattice lat;
    lat.values.reserve(static_cast<size_t>(4 * n));
    // Ascending: -(1/2 + j/den) ... -j/den ... j/den ... (1/2 + j/den).
    for (int j = n; j >= 1; --j) lat.values.emplace_back(-(n + 1 + j), den);
    for (int j = n; j >= 1; --j) lat.values.emplace_back(-j, den);
    for (int j = 1; j <= n; ++j) lat.values.emplace_back(j, den);
    for (int j = 1; j <= n; ++j) lat.values.emplace_back(n + 1 + j, den);
    return lat;
}

namespace {

// Brute-force kernel over the scaled lattice: every lattice value times
// 2n+2 is a small integer, so all functional signs are integer arithmetic.
struct RegionKernel {
    int n;
    int half_scaled;              // (2n+2) * 1/2 = n+1
    std::vector<int> values;      // scaled lattice values, ascending
    struct Plane {
        Hyperplane::Kind kind;
        int i, j;
        int slot;  // bit position in the canonical sign vector
    };
    std::vector<std::vector<Plane>> by_depth;  // planes checkable once coordinate d is set

    RegionKernel(const TypeCSubarrangement& arr, const GenericLattice& lat)
        : n(arr.dimension()), half_scaled(n + 1), by_depth(static_cast<size_t>(n) + 1) {
        const int den = 2 * n + 2;
        for (const auto& v : lat.values) {
            const BigRational scaled = v * den;
            values.push_back(static_cast<int>(numerator(scaled)));
        }
        int slot = 0;
        for (const auto& h : arr.hyperplanes())
            by_depth[static_cast<size_t>(h.max_index())].push_back(Plane{h.kind, h.i, h.j, slot++});
    }

    // Appends sign bits for the planes at this depth into `bits`; returns
    // false (prune) if any functional vanishes.
    bool signs_at(int depth, const std::vector<int>& x, std::uint64_t& bits) const {
        for (const auto& pl : by_depth[static_cast<size_t>(depth)]) {
            int f = x[static_cast<size_t>(pl.i - 1)];
            switch (pl.kind) {
                case Hyperplane::Kind::SumZero: f += x[static_cast<size_t>(pl.j - 1)]; break;
                case Hyperplane::Kind::DiffZero: f -= x[static_cast<size_t>(pl.j - 1)]; break;
                case Hyperplane::Kind::CoordZero: break;
                case Hyperplane::Kind::BoxLow: f += half_scaled; break;
                case Hyperplane::Kind::BoxHigh: f -= half_scaled; break;
            }
            if (f == 0) return false;
            if (f > 0) bits |= std::uint64_t{1} << pl.slot;
        }
        return true;
    }

    void scan(int depth, std::vector<int>& x, std::uint64_t bits,
              std::unordered_set<std::uint64_t>& found) const {
        if (depth > n) {
            found.insert(bits);
            return;
        }
        for (int v : values) {
            x[static_cast<size_t>(depth - 1)] = v;
            std::uint64_t b = bits;
            if (signs_at(depth, x, b)) scan(depth + 1, x, b, found);
        }
    }
};

}  // namespace

std::set<SignVector> enumerate_regions(const TypeCSubarrangement& arr, int jobs,
                                       std::uint64_t max_points) {
    const int n = arr.dimension();
    if (n == 0) return {SignVector{}};
    if (arr.size() > 63) throw SearchSpaceTooLarge("enumerate_regions: too many hyperplanes");

    BigInt space = 1;
    for (int d = 0; d < n; ++d) space *= 4 * n;
    if (space > BigInt(max_points))
        throw SearchSpaceTooLarge("enumerate_regions: (4n)^n = " + space.str() + " exceeds cap " +
                                  std::to_string(max_points) + " (raise the cap to override)");

    const GenericLattice lat = build_lattice(n);
    const RegionKernel kernel(arr, lat);

    std::unordered_set<std::uint64_t> found;
    if (jobs <= 1 || n == 1) {
        std::vector<int> x(static_cast<size_t>(n), 0);
        kernel.scan(1, x, 0, found);
    } else {
        std::vector<std::unordered_set<std::uint64_t>> partial(static_cast<size_t>(jobs));
        std::vector<std::thread> workers;
        workers.reserve(static_cast<size_t>(jobs));
        for (int w = 0; w < jobs; ++w) {
            workers.emplace_back([&, w]() {
                std::vector<int> x(static_cast<size_t>(n), 0);
                auto& local = partial[static_cast<size_t>(w)];
                for (size_t vi = static_cast<size_t>(w); vi < kernel.values.size();
                     vi += static_cast<size_t>(jobs)) {
                    x[0] = kernel.values[vi];
                    std::uint64_t bits = 0;
                    if (kernel.signs_at(1, x, bits)) kernel.scan(2, x, bits, local);
                }
            });
        }
        for (auto& t : workers) t.join();
        for (const auto& p : partial) found.insert(p.begin(), p.end());
    }

    std::set<SignVector> out;
    const size_t m = arr.size();
    for (std::uint64_t bits : found) {
        SignVector sv(m);
        for (size_t h = 0; h < m; ++h) sv[h] = (bits >> h) & 1u ? 1 : -1;
        out.insert(std::move(sv));
    }
    return out;
}

Report compare_with_set(const std::set<SignVector>& oracle, const std::vector<SignVector>& labels) {
    Report r;
    std::map<SignVector, std::uint64_t> hits;
    for (const auto& sv : labels) {
        auto [it, fresh] = hits.emplace(sv, 0);
        ++it->second;
        if (!fresh) ++r.duplicates;
        if (fresh && !oracle.count(sv)) ++r.extraneous;
    }
    for (const auto& sv : oracle)
        if (!hits.count(sv)) ++r.missing;
    return r;
}

Report compare_with(const TypeCSubarrangement& arr, const std::vector<SignVector>& labels, int jobs,
                    std::uint64_t max_points) {
    return compare_with_set(enumerate_regions(arr, jobs, max_points), labels);
}

std::string report_to_json(const Report& r) {
    nlohmann::json out;
    out["missing"] = r.missing;
    out["duplicates"] = r.duplicates;
    out["extraneous"] = r.extraneous;
    out["ok"] = r.ok();
    return out.dump();
}

}  // namespace arratlas
