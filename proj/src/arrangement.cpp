#include "arratlas/arrangement.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <thread>

namespace arratlas {

namespace {

const char* kind_name(Hyperplane::Kind k) {
    switch (k) {
        case Hyperplane::Kind::SumZero: return "sum";
        case Hyperplane::Kind::DiffZero: return "diff";
        case Hyperplane::Kind::CoordZero: return "coord";
        case Hyperplane::Kind::BoxLow: return "box_low";
        case Hyperplane::Kind::BoxHigh: return "box_high";
    }
    throw std::logic_error("kind_name: bad kind");
}

Hyperplane::Kind kind_from_name(const std::string& s) {
    if (s == "sum") return Hyperplane::Kind::SumZero;
    if (s == "diff") return Hyperplane::Kind::DiffZero;
    if (s == "coord") return Hyperplane::Kind::CoordZero;
    if (s == "box_low") return Hyperplane::Kind::BoxLow;
    if (s == "box_high") return Hyperplane::Kind::BoxHigh;
    throw std::invalid_argument("arrangement_from_json: unknown kind '" + s + "'");
}

}  // namespace

Hyperplane Hyperplane::sum_zero(int i, int j) {
    if (!(1 <= i && i < j)) throw std::invalid_argument("sum_zero: need 1 <= i < j");
    return {Kind::SumZero, i, j};
}

Hyperplane Hyperplane::diff_zero(int i, int j) {
    if (!(1 <= i && i < j)) throw std::invalid_argument("diff_zero: need 1 <= i < j");
    return {Kind::DiffZero, i, j};
}

Hyperplane Hyperplane::coord_zero(int i) {
    if (i < 1) throw std::invalid_argument("coord_zero: need i >= 1");
    return {Kind::CoordZero, i, 0};
}

Hyperplane Hyperplane::box_low(int i) {
    if (i < 1) throw std::invalid_argument("box_low: need i >= 1");
    return {Kind::BoxLow, i, 0};
}

Hyperplane Hyperplane::box_high(int i) {
    if (i < 1) throw std::invalid_argument("box_high: need i >= 1");
    return {Kind::BoxHigh, i, 0};
}

std::string Hyperplane::to_string() const {
    switch (kind) {
        case Kind::SumZero: return "x" + std::to_string(i) + "+x" + std::to_string(j) + "=0";
        case Kind::DiffZero: return "x" + std::to_string(i) + "-x" + std::to_string(j) + "=0";
        case Kind::CoordZero: return "x" + std::to_string(i) + "=0";
        case Kind::BoxLow: return "x" + std::to_string(i) + "=-1/2";
        case Kind::BoxHigh: return "x" + std::to_string(i) + "=1/2";
    }
    throw std::logic_error("Hyperplane::to_string: bad kind");
}

TypeCSubarrangement::TypeCSubarrangement(int n, std::vector<Hyperplane> hyperplanes)
    : TypeCSubarrangement(n) {
    for (const auto& h : hyperplanes) add(h);
}

bool TypeCSubarrangement::has_box_walls() const {
    return std::any_of(hyperplanes_.begin(), hyperplanes_.end(),
                       [](const Hyperplane& h) { return h.is_box(); });
}

void TypeCSubarrangement::add(const Hyperplane& h) {
    if (h.max_index() > n_)
        throw std::invalid_argument("TypeCSubarrangement::add: index exceeds dimension");
    auto it = std::lower_bound(hyperplanes_.begin(), hyperplanes_.end(), h);
    if (it != hyperplanes_.end() && *it == h) return;
    hyperplanes_.insert(it, h);
}

TypeCSubarrangement threshold_arrangement(int n) {
    TypeCSubarrangement arr(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) arr.add(Hyperplane::sum_zero(i, j));
    return arr;
}

TypeCSubarrangement box(const TypeCSubarrangement& arr) {
    if (arr.has_box_walls()) throw AlreadyBoxed("box: arrangement already has box walls");
    TypeCSubarrangement out = arr;
    for (int i = 1; i <= arr.dimension(); ++i) {
        out.add(Hyperplane::box_low(i));
        out.add(Hyperplane::box_high(i));
    }
    return out;
}

namespace {

// Counting kernel: odometer over the symmetric residues with subtree pruning.
// Hyperplanes are bucketed by their largest coordinate index so each one is
// tested exactly when its last coordinate gets a value.
struct CountKernel {
    int n;
    int q;
    int half;                                        // (q-1)/2
    std::vector<std::vector<Hyperplane>> by_depth;   // index d: planes with max_index == d

    explicit CountKernel(const TypeCSubarrangement& arr, int q_)
        : n(arr.dimension()), q(q_), half((q_ - 1) / 2), by_depth(static_cast<size_t>(n) + 1) {
        for (const auto& h : arr.hyperplanes())
            by_depth[static_cast<size_t>(h.max_index())].push_back(h);
    }

    bool violates(const Hyperplane& h, const std::vector<int>& a) const {
        const int ai = a[static_cast<size_t>(h.i - 1)];
        switch (h.kind) {
            case Hyperplane::Kind::SumZero:
                // |ai + aj| <= q-1, so == 0 mod q iff == 0.
                return ai + a[static_cast<size_t>(h.j - 1)] == 0;
            case Hyperplane::Kind::DiffZero:
                return ai - a[static_cast<size_t>(h.j - 1)] == 0;
            case Hyperplane::Kind::CoordZero:
                return ai == 0;
            case Hyperplane::Kind::BoxLow:
                return (2 * ai + 1) % q == 0;
            case Hyperplane::Kind::BoxHigh:
                return (2 * ai - 1) % q == 0;
        }
        return false;
    }

    // Count admissible completions of coordinates depth..n (1-based), given
    // a[0..depth-2] already fixed and admissible.
    unsigned long long count_from(int depth, std::vector<int>& a) const {
        if (depth > n) return 1;
        unsigned long long total = 0;
        for (int v = -half; v <= half; ++v) {
            a[static_cast<size_t>(depth - 1)] = v;
            bool ok = true;
            for (const auto& h : by_depth[static_cast<size_t>(depth)]) {
                if (violates(h, a)) {
                    ok = false;
                    break;
                }
            }
            if (ok) total += count_from(depth + 1, a);
        }
        return total;
    }
};

}  // namespace

BigInt count_complement(const TypeCSubarrangement& arr, int q, int jobs) {
    if (q < 3 || q % 2 == 0) throw EvenModulus("count_complement: modulus must be odd and >= 3");
    const int n = arr.dimension();
    if (n == 0) return 1;
    CountKernel kernel(arr, q);

    if (jobs <= 1 || n == 1) {
        std::vector<int> a(static_cast<size_t>(n), 0);
        return BigInt(kernel.count_from(1, a));
    }

    // Shard on the first coordinate; the shard sum is exact and independent
    // of the shard layout.
    const int half = kernel.half;
    std::vector<unsigned long long> partial(static_cast<size_t>(jobs), 0);
    std::vector<std::thread> workers;
    workers.reserve(static_cast<size_t>(jobs));
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w]() {
            std::vector<int> a(static_cast<size_t>(n), 0);
            unsigned long long local = 0;
            for (int v = -half + w; v <= half; v += jobs) {
                a[0] = v;
                bool ok = true;
                for (const auto& h : kernel.by_depth[1]) {
                    if (kernel.violates(h, a)) {
                        ok = false;
                        break;
                    }
                }
                if (ok) local += kernel.count_from(2, a);
            }
            partial[static_cast<size_t>(w)] = local;
        });
    }
    for (auto& t : workers) t.join();
    BigInt total = 0;
    for (auto c : partial) total += c;
    return total;
}

Polynomial char_poly(const TypeCSubarrangement& arr, int q0, int jobs) {
    const int n = arr.dimension();
    if (q0 == 0) q0 = 2 * n + 3;
    if (q0 < 3 || q0 % 2 == 0) throw EvenModulus("char_poly: q0 must be odd and >= 3");

    std::vector<std::pair<BigInt, BigInt>> samples;
    samples.reserve(static_cast<size_t>(n) + 1);
    int q = q0;
    for (int s = 0; s <= n; ++s, q += 2)
        samples.emplace_back(BigInt(q), count_complement(arr, q, jobs));
    Polynomial chi = interpolate(samples);

    // The finite field method only promises polynomial behaviour for large
    // odd moduli; one extra sample turns "large enough" into a checked
    // property of this run.
    const BigInt expected = count_complement(arr, q, jobs);
    if (poly_eval(chi, BigInt(q)) != expected)
        throw VerificationModulusMismatch("char_poly: verification modulus q=" + std::to_string(q) +
                                          " disagrees with interpolated polynomial");
    return chi;
}

BigInt regions(const TypeCSubarrangement& arr, int jobs) {
    const BigInt v = poly_eval(char_poly(arr, 0, jobs), BigInt(-1));
    return arr.dimension() % 2 == 0 ? v : BigInt(-v);
}

BigInt bounded_regions(const TypeCSubarrangement& arr, int jobs) {
    const BigInt v = poly_eval(char_poly(arr, 0, jobs), BigInt(1));
    return arr.dimension() % 2 == 0 ? v : BigInt(-v);
}

std::string arrangement_to_json(const TypeCSubarrangement& arr) {
    nlohmann::json planes = nlohmann::json::array();
    for (const auto& h : arr.hyperplanes()) {
        nlohmann::json p;
        p["kind"] = kind_name(h.kind);
        p["i"] = h.i;
        if (h.kind == Hyperplane::Kind::SumZero || h.kind == Hyperplane::Kind::DiffZero)
            p["j"] = h.j;
        planes.push_back(std::move(p));
    }
    nlohmann::json out;
    out["n"] = arr.dimension();
    out["hyperplanes"] = std::move(planes);
    out["boxed"] = arr.has_box_walls();
    return out.dump();
}

TypeCSubarrangement arrangement_from_json(const std::string& json_text) {
    const auto j = nlohmann::json::parse(json_text);
    TypeCSubarrangement arr(j.at("n").get<int>());
    for (const auto& p : j.at("hyperplanes")) {
        const auto kind = kind_from_name(p.at("kind").get<std::string>());
        const int i = p.at("i").get<int>();
        switch (kind) {
            case Hyperplane::Kind::SumZero: arr.add(Hyperplane::sum_zero(i, p.at("j").get<int>())); break;
            case Hyperplane::Kind::DiffZero: arr.add(Hyperplane::diff_zero(i, p.at("j").get<int>())); break;
            case Hyperplane::Kind::CoordZero: arr.add(Hyperplane::coord_zero(i)); break;
            case Hyperplane::Kind::BoxLow: arr.add(Hyperplane::box_low(i)); break;
            case Hyperplane::Kind::BoxHigh: arr.add(Hyperplane::box_high(i)); break;
        }
    }
    return arr;
}

}  // namespace arratlas
