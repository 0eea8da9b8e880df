#include "hyperpath/coloring.hpp"

#include "hyperpath/coloring_io.hpp"
#include "hyperpath/higher_order.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace hyperpath {

EdgeColoring::EdgeColoring(int k, int q, int N, std::vector<std::uint8_t> colors)
    : k_(k), q_(q), N_(N), table_(std::max(N, 1), std::max(k, 1)), colors_(std::move(colors)) {
    if (k < 1) throw InputError("uniformity k must be at least 1");
    if (q < 1 || q > 255) throw InputError("color count q must lie in 1..255");
    if (N < 0) throw InputError("vertex count must be nonnegative");
    const std::uint64_t expected = N >= k ? subset_count(N, k) : 0;
    if (colors_.size() != expected) throw InputError("color array length does not match C(N, k)");
    for (auto c : colors_)
        if (c < 1 || c > q) throw InputError("edge color out of range 1..q");
}

void EdgeColoring::set_labels(std::vector<nlohmann::json> labels) {
    if (labels.size() != static_cast<std::size_t>(N_)) throw InputError("one label per vertex required");
    labels_ = std::move(labels);
}

EdgeColoring monochromatic(int k, int q, int N, int color) {
    const std::uint64_t m = N >= k ? subset_count(N, k) : 0;
    return EdgeColoring(k, q, N, std::vector<std::uint8_t>(m, static_cast<std::uint8_t>(color)));
}

namespace {

std::uint64_t checked_edges(int N, int k, const WorkBudget& budget) {
    const std::uint64_t m = N >= k ? subset_count(N, k) : 0;
    budget.check(m, "edge coloring");
    return m;
}

// First axis where y exceeds x, 1-based; 0 if y ≼ x.
int first_increase(const GridPoint& x, const GridPoint& y) {
    for (std::size_t t = 0; t < x.dimension(); ++t)
        if (y[t] > x[t]) return static_cast<int>(t) + 1;
    return 0;
}

}  // namespace

EdgeColoring color_graph_lower(const GridBox& box, const WorkBudget& budget) {
    budget.check(box.size(), "vertex set");
    const int N = static_cast<int>(box.size());
    const int q = static_cast<int>(box.dimension());
    std::vector<std::uint8_t> colors;
    colors.reserve(checked_edges(N, 2, budget));
    std::vector<GridPoint> pts;
    for (int i = 0; i < N; ++i) pts.push_back(box.point_at(static_cast<std::size_t>(i)));
    for (int y = 1; y < N; ++y)
        for (int x = 0; x < y; ++x) {
            const int c = first_increase(pts[static_cast<std::size_t>(x)], pts[static_cast<std::size_t>(y)]);
            if (c == 0) throw InvariantError("lexicographic order without an increasing coordinate");
            colors.push_back(static_cast<std::uint8_t>(c));
        }
    EdgeColoring out(2, q, N, std::move(colors));
    std::vector<nlohmann::json> labels;
    for (const auto& p : pts) labels.push_back(point_json(p));
    out.set_labels(std::move(labels));
    return out;
}

EdgeColoring color_3uniform_lower(const GridBox& box, const WorkBudget& budget) {
    if (box.dimension() < 2) throw InputError("3-uniform construction needs q >= 2");
    const int q = static_cast<int>(box.dimension());
    const std::vector<HyperPartition> parts = all_partitions(box, budget.max_entries);
    const int N = static_cast<int>(parts.size());
    const std::uint64_t m = checked_edges(N, 3, budget);
    budget.check(static_cast<std::size_t>(N) * static_cast<std::size_t>(N), "pair table");

    const GridBox index(parts.front().index_extents());
    const std::size_t cells = index.size();
    // rule[u * cells + v]: color of A < B < C with delta(A,B) = u, delta(B,C) = v
    std::vector<std::uint8_t> rule(cells * cells);
    for (std::size_t u = 0; u < cells; ++u)
        for (std::size_t v = 0; v < cells; ++v) {
            const int c = first_increase(index.point_at(u), index.point_at(v));
            rule[u * cells + v] = static_cast<std::uint8_t>(c == 0 ? q : c);
        }
    const auto n = static_cast<std::size_t>(N);
    std::vector<std::uint32_t> delta(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            const auto f = first_difference(parts[a], parts[b]);
            if (!f || parts[a].at(*f) >= parts[b].at(*f))
                throw InvariantError("partitions are not in increasing lexicographic order");
            delta[a * n + b] = static_cast<std::uint32_t>(*f);
        }
    std::vector<std::uint8_t> colors;
    colors.reserve(m);
    for (std::size_t c = 2; c < n; ++c)
        for (std::size_t b = 1; b < c; ++b) {
            const std::uint32_t v = delta[b * n + c];
            for (std::size_t a = 0; a < b; ++a) colors.push_back(rule[delta[a * n + b] * cells + v]);
        }
    EdgeColoring out(3, q, N, std::move(colors));
    std::vector<nlohmann::json> labels;
    labels.reserve(parts.size());
    for (const auto& p : parts) labels.push_back(partition_json(p));
    out.set_labels(std::move(labels));
    return out;
}

EdgeColoring color_kuniform_lower(int k, const GridBox& box, const WorkBudget& budget) {
    if (k < 2) throw InputError("k-uniform construction needs k >= 2");
    if (k > 16) throw InputError("k-uniform construction supports k <= 16");
    const Universe u = Universe::build(k, box, budget);
    const int N = static_cast<int>(u.size());
    const int q = static_cast<int>(box.dimension());
    const std::uint64_t m = checked_edges(N, k, budget);

    std::vector<std::uint8_t> colors;
    colors.reserve(m);
    if (N >= k) {
        std::array<std::size_t, 16> chain{};
        std::vector<int> e = first_subset(k);
        do {
            for (int i = 0; i < k; ++i) chain[static_cast<std::size_t>(i)] = static_cast<std::size_t>(e[static_cast<std::size_t>(i)]);
            const std::span<const std::size_t> all(chain.data(), static_cast<std::size_t>(k));
            const GridPoint x = u.delta_star(k, all.first(static_cast<std::size_t>(k - 1)));
            const GridPoint y = u.delta_star(k, all.last(static_cast<std::size_t>(k - 1)));
            const int c = first_increase(x, y);
            if (c == 0) throw InvariantError("delta* of consecutive chains is comparable the wrong way");
            colors.push_back(static_cast<std::uint8_t>(c));
        } while (next_colex(e, N));
    }
    EdgeColoring out(k, q, N, std::move(colors));
    const nlohmann::json dump = universe_json(u, k);
    out.set_labels(std::vector<nlohmann::json>(dump.begin(), dump.end()));
    return out;
}

bool violates_transitivity(const EdgeColoring& c, std::span<const int> tuple) {
    const int k = c.k();
    if (tuple.size() != static_cast<std::size_t>(k) + 1) throw InputError("transitivity needs a (k+1)-tuple");
    std::vector<int> e(tuple.begin(), tuple.end() - 1);
    const int first = c.color(e);
    const int second = c.color(tuple.subspan(1));
    if (first != second) return false;
    for (int j = 1; j < k; ++j) {
        std::vector<int> other;
        for (int t = 0; t <= k; ++t)
            if (t != j) other.push_back(tuple[static_cast<std::size_t>(t)]);
        if (c.color(other) != first) return true;
    }
    return false;
}

// rows[(rank(t) * q + color) * W ..]: bitset of w > max(t) with color(t, w) = color,
// for each (k-1)-tuple t. The (k+1)-tuples starting with an edge m are then
// checked a word at a time.
TransitivityResult is_transitive(const EdgeColoring& c, const WorkBudget& budget) {
    const int k = c.k();
    const int N = c.N();
    const int q = c.q();
    TransitivityResult res;
    if (N < k + 1) return res;
    const std::size_t W = (static_cast<std::size_t>(N) + 63) / 64;
    const std::uint64_t tuples = subset_count(N, k - 1);
    const std::size_t row_words = static_cast<std::size_t>(tuples) * static_cast<std::size_t>(q) * W;
    budget.check(row_words, "transitivity rows");
    std::vector<std::uint64_t> rows(row_words, 0);
    const BinomialTable& bt = c.binomials();
    auto row = [&](std::span<const int> t, int color) {
        return rows.data() + (colex_rank(t, bt) * static_cast<std::size_t>(q) + static_cast<std::size_t>(color - 1)) * W;
    };
    {
        std::vector<int> e = first_subset(k);
        std::size_t rank = 0;
        do {
            const int w = e.back();
            row(std::span<const int>(e).first(static_cast<std::size_t>(k - 1)), c.color(rank))[w >> 6] |=
                std::uint64_t{1} << (w & 63);
            ++rank;
        } while (next_colex(e, N));
    }
    std::vector<int> m = first_subset(k);
    std::vector<int> tmp(static_cast<std::size_t>(k - 1));
    std::vector<const std::uint64_t*> required(static_cast<std::size_t>(k - 1));
    do {
        const int i = c.color(m);
        const int last = m.back();
        if (last + 1 >= N) continue;
        const std::uint64_t* trig = row(std::span<const int>(m).subspan(1), i);
        for (int j = 1; j < k; ++j) {
            std::size_t p = 0;
            for (int t = 0; t < k; ++t)
                if (t != j) tmp[p++] = m[static_cast<std::size_t>(t)];
            required[static_cast<std::size_t>(j - 1)] = row(tmp, i);
        }
        const std::size_t start = static_cast<std::size_t>(last + 1) >> 6;
        for (std::size_t wi = start; wi < W; ++wi) {
            std::uint64_t need = ~std::uint64_t{0};
            for (auto r : required) need &= r[wi];
            std::uint64_t bad = trig[wi] & ~need;
            if (wi == start) bad &= ~std::uint64_t{0} << ((last + 1) & 63);
            if (bad != 0) {
                res.transitive = false;
                res.witness = m;
                res.witness.push_back(static_cast<int>(wi * 64) + std::countr_zero(bad));
                return res;
            }
        }
    } while (next_lex(m, N));
    return res;
}

}  // namespace hyperpath
