#include "hyperpath/search.hpp"

#include "hyperpath/combinatorics.hpp"
#include "hyperpath/errors.hpp"
#include "hyperpath/path_engine.hpp"

#include <bit>
#include <chrono>

namespace hyperpath {

const char* to_string(SearchStatus s) noexcept {
    switch (s) {
        case SearchStatus::exact: return "exact";
        case SearchStatus::lower_bound_only: return "lower_bound_only";
        case SearchStatus::budget_exhausted: return "budget_exhausted";
    }
    return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

struct Edges {
    std::vector<std::uint32_t> head;  // colex rank of the first k-1 vertices
    std::vector<std::uint32_t> tail;  // colex rank of the last k-1 vertices
    std::vector<std::vector<int>> vertices;
};

Edges list_edges(int k, int N) {
    Edges out;
    if (N < k) return out;
    const BinomialTable bt(N, k);
    std::vector<int> e = first_subset(k);
    do {
        const std::span<const int> es(e);
        out.head.push_back(static_cast<std::uint32_t>(colex_rank(es.first(static_cast<std::size_t>(k - 1)), bt)));
        out.tail.push_back(static_cast<std::uint32_t>(colex_rank(es.last(static_cast<std::size_t>(k - 1)), bt)));
        out.vertices.push_back(e);
    } while (next_colex(e, N));
    return out;
}

class Limits {
public:
    Limits(const SearchBudget& b, std::uint64_t& nodes, double seconds_left)
        : budget_(b), nodes_(nodes), deadline_(Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds_left))) {}

    void tick() {
        if (++nodes_ > budget_.max_nodes) throw BudgetExceeded("search node budget exhausted");
        if ((nodes_ & 1023) == 0 && Clock::now() > deadline_) throw BudgetExceeded("search time budget exhausted");
    }

private:
    const SearchBudget& budget_;
    std::uint64_t& nodes_;
    Clock::time_point deadline_;
};

// Colors edges in colex order. When an edge is reached every edge ending
// with its first k-1 vertices is already colored, so the path length
// through it is final and a too-long path is cut at once.
std::optional<std::vector<std::uint8_t>> backtrack(int k, int q, int n, int N, Limits& limits) {
    const Edges edges = list_edges(k, N);
    const std::size_t m = edges.head.size();
    std::vector<std::uint8_t> colors(m, 0);
    if (m == 0) return colors;
    const std::uint64_t states = subset_count(N, k - 1);
    std::vector<std::vector<std::uint32_t>> len(static_cast<std::size_t>(q), std::vector<std::uint32_t>(states, 0));

    auto rec = [&](auto&& self, std::size_t r) -> bool {
        if (r == m) return true;
        const int top = r == 0 ? 1 : q;
        for (int col = 1; col <= top; ++col) {
            auto& row = len[static_cast<std::size_t>(col - 1)];
            const std::uint32_t through = row[edges.head[r]] + 1;
            if (through >= static_cast<std::uint32_t>(n)) continue;
            limits.tick();
            const std::uint32_t saved = row[edges.tail[r]];
            row[edges.tail[r]] = std::max(saved, through);
            colors[r] = static_cast<std::uint8_t>(col);
            if (self(self, r + 1)) return true;
            row[edges.tail[r]] = saved;
        }
        return false;
    };
    if (rec(rec, 0)) return colors;
    return std::nullopt;
}

// For n = 2 a coloring is valid iff consecutive edges {x_1..x_k} and
// {x_2..x_{k+1}} always differ. Domains are color bitmasks; fixing a color
// removes it from every neighbour, and singletons propagate.
std::optional<std::vector<std::uint8_t>> propagate_search(int k, int q, int N, Limits& limits) {
    const Edges edges = list_edges(k, N);
    const std::size_t m = edges.head.size();
    if (m == 0) return std::vector<std::uint8_t>{};
    const std::uint64_t states = subset_count(N, k - 1);
    std::vector<std::vector<std::uint32_t>> by_head(states), by_tail(states);
    for (std::size_t r = 0; r < m; ++r) {
        by_head[edges.head[r]].push_back(static_cast<std::uint32_t>(r));
        by_tail[edges.tail[r]].push_back(static_cast<std::uint32_t>(r));
    }
    // e and f conflict when tail(e) = head(f) or tail(f) = head(e)
    std::vector<std::vector<std::uint32_t>> nbr(m);
    for (std::size_t r = 0; r < m; ++r) {
        for (auto f : by_head[edges.tail[r]])
            if (f != r) nbr[r].push_back(f);
        for (auto f : by_tail[edges.head[r]])
            if (f != r) nbr[r].push_back(f);
    }

    using Mask = std::uint32_t;
    if (q > 32) throw InputError("propagation search supports q <= 32");
    const Mask full = q == 32 ? ~Mask{0} : ((Mask{1} << q) - 1);
    std::vector<Mask> dom(m, full);
    std::vector<std::pair<std::uint32_t, Mask>> trail;
    std::vector<std::uint32_t> queue;

    auto propagate = [&]() -> bool {
        while (!queue.empty()) {
            const std::uint32_t v = queue.back();
            queue.pop_back();
            const Mask c = dom[v];
            for (auto u : nbr[v]) {
                if ((dom[u] & c) == 0) continue;
                trail.emplace_back(u, dom[u]);
                dom[u] &= ~c;
                if (dom[u] == 0) return false;
                if (std::has_single_bit(dom[u])) queue.push_back(u);
            }
        }
        return true;
    };
    auto undo = [&](std::size_t mark) {
        while (trail.size() > mark) {
            dom[trail.back().first] = trail.back().second;
            trail.pop_back();
        }
    };

    if (q == 1) {
        for (std::uint32_t r = 0; r < m; ++r) queue.push_back(r);
        if (!propagate()) return std::nullopt;
    }
    auto rec = [&](auto&& self, std::size_t from) -> bool {
        std::size_t r = from;
        while (r < m && std::has_single_bit(dom[r])) ++r;
        if (r == m) return true;
        const Mask choices = r == 0 ? (dom[r] & 1u) : dom[r];
        for (int col = 0; col < q; ++col) {
            const Mask bit = Mask{1} << col;
            if ((choices & bit) == 0) continue;
            limits.tick();
            const std::size_t mark = trail.size();
            trail.emplace_back(static_cast<std::uint32_t>(r), dom[r]);
            dom[r] = bit;
            queue.assign(1, static_cast<std::uint32_t>(r));
            if (propagate() && self(self, r + 1)) return true;
            queue.clear();
            undo(mark);
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    std::vector<std::uint8_t> colors(m);
    for (std::size_t r = 0; r < m; ++r) colors[r] = static_cast<std::uint8_t>(std::countr_zero(dom[r]) + 1);
    return colors;
}

}  // namespace

std::optional<EdgeColoring> find_avoiding_coloring(int k, int q, int n, int N, const SearchBudget& budget,
                                                   SearchMode mode, std::uint64_t& nodes, double& seconds_left) {
    if (k < 1 || q < 1 || n < 1 || N < 0) throw InputError("search needs k, q, n >= 1");
    if (mode == SearchMode::propagation && n != 2) throw InputError("propagation search requires n = 2");
    const auto start = Clock::now();
    Limits limits(budget, nodes, seconds_left);
    const bool prop = mode == SearchMode::propagation || (mode == SearchMode::automatic && n == 2);
    std::optional<std::vector<std::uint8_t>> colors;
    try {
        colors = prop ? propagate_search(k, q, N, limits) : backtrack(k, q, n, N, limits);
    } catch (...) {
        seconds_left -= std::chrono::duration<double>(Clock::now() - start).count();
        throw;
    }
    seconds_left -= std::chrono::duration<double>(Clock::now() - start).count();
    if (!colors) return std::nullopt;
    return EdgeColoring(k, q, N, std::move(*colors));
}

SearchResult exact_ramsey(int k, int q, int n, int N_max, const SearchBudget& budget, SearchMode mode) {
    if (N_max < 1) throw InputError("N_max must be at least 1");
    if (q > 255) throw InputError("q must be at most 255");
    SearchResult res;
    const auto start = Clock::now();
    double left = budget.max_seconds;
    try {
        for (int N = 1; N <= N_max; ++N) {
            auto c = find_avoiding_coloring(k, q, n, N, budget, mode, res.nodes, left);
            if (!c) {
                res.status = SearchStatus::exact;
                res.value = N;
                break;
            }
            res.colorable = N;
            res.extremal = std::move(c);
        }
        if (!res.value) res.status = SearchStatus::lower_bound_only;
    } catch (const BudgetExceeded&) {
        res.status = SearchStatus::budget_exhausted;
    }
    if (res.extremal) {
        const LongestPaths lp = longest_mono(*res.extremal);
        for (int len : lp.max_length)
            if (len >= n) throw InvariantError("search returned a coloring with a long monochromatic path");
    }
    res.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return res;
}

}  // namespace hyperpath
