#include "hyperpath/path_engine.hpp"

#include "hyperpath/higher_order.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace hyperpath {

namespace {

std::uint64_t state_count(const EdgeColoring& c, const WorkBudget& budget) {
    const std::uint64_t states = subset_count(c.N(), c.k() - 1);
    budget.check(static_cast<std::size_t>(states) * static_cast<std::size_t>(c.q()), "path table");
    return states;
}

std::uint64_t rank_of(std::span<const int> t, const BinomialTable& bt) { return colex_rank(t, bt); }

// Longest path of each color starting with each (k-1)-tuple, by colex rank
// of that tuple. Computed as the ending table of the mirrored coloring.
std::vector<std::vector<std::uint32_t>> starting_table(const EdgeColoring& c, std::uint64_t states) {
    const int k = c.k();
    const int N = c.N();
    const BinomialTable& bt = c.binomials();
    std::vector<std::vector<std::uint32_t>> g(static_cast<std::size_t>(c.q()), std::vector<std::uint32_t>(states, 0));
    if (N < k) return g;
    std::vector<int> mirrored = first_subset(k);
    std::vector<int> e(static_cast<std::size_t>(k));
    do {
        for (int i = 0; i < k; ++i) e[static_cast<std::size_t>(i)] = N - 1 - mirrored[static_cast<std::size_t>(k - 1 - i)];
        auto& row = g[static_cast<std::size_t>(c.color(e) - 1)];
        const std::span<const int> es(e);
        const auto head = rank_of(es.first(static_cast<std::size_t>(k - 1)), bt);
        const auto tail = rank_of(es.last(static_cast<std::size_t>(k - 1)), bt);
        row[head] = std::max(row[head], row[tail] + 1);
    } while (next_colex(mirrored, N));
    return g;
}

}  // namespace

PathTable path_table(const EdgeColoring& c, const WorkBudget& budget) {
    if (c.k() < 1) throw InputError("paths need k >= 1");
    const int k = c.k();
    const int N = c.N();
    const std::uint64_t states = state_count(c, budget);
    PathTable t{k, c.q(), N, std::vector<std::vector<std::uint32_t>>(static_cast<std::size_t>(c.q()), std::vector<std::uint32_t>(states, 0))};
    if (N < k) return t;
    const BinomialTable& bt = c.binomials();
    std::vector<int> e = first_subset(k);
    std::size_t rank = 0;
    do {
        auto& row = t.ending[static_cast<std::size_t>(c.color(rank) - 1)];
        const std::span<const int> es(e);
        const auto head = rank_of(es.first(static_cast<std::size_t>(k - 1)), bt);
        const auto tail = rank_of(es.last(static_cast<std::size_t>(k - 1)), bt);
        row[tail] = std::max(row[tail], row[head] + 1);
        ++rank;
    } while (next_colex(e, N));
    return t;
}

LongestPaths longest_mono(const EdgeColoring& c, const WorkBudget& budget) {
    const int k = c.k();
    const int N = c.N();
    const int q = c.q();
    const PathTable t = path_table(c, budget);
    const std::uint64_t states = subset_count(N, k - 1);
    LongestPaths out;
    for (int col = 1; col <= q; ++col) {
        const auto& row = t.ending[static_cast<std::size_t>(col - 1)];
        out.max_length.push_back(row.empty() ? 0 : static_cast<int>(*std::max_element(row.begin(), row.end())));
    }
    const auto g = starting_table(c, states);
    const BinomialTable& bt = c.binomials();
    for (int col = 1; col <= q; ++col) {
        MonotonePath p;
        p.color = col;
        const int best = out.max_length[static_cast<std::size_t>(col - 1)];
        if (best > 0) {
            const auto& row = g[static_cast<std::size_t>(col - 1)];
            std::vector<int> head = first_subset(k - 1);
            while (row[rank_of(head, bt)] < static_cast<std::uint32_t>(best)) next_lex(head, N);
            p.vertices = head;
            std::vector<int> window(head);
            for (int remaining = best; remaining > 0; --remaining) {
                const int from = p.vertices.empty() ? 0 : p.vertices.back() + 1;
                std::vector<int> edge(window);
                edge.push_back(0);
                bool found = false;
                for (int w = from; w < N && !found; ++w) {
                    edge.back() = w;
                    if (c.color(edge) != col) continue;
                    const std::span<const int> next(edge.data() + 1, static_cast<std::size_t>(k - 1));
                    if (row[rank_of(next, bt)] + 1 < static_cast<std::uint32_t>(remaining)) continue;
                    p.vertices.push_back(w);
                    window.assign(next.begin(), next.end());
                    found = true;
                }
                if (!found) throw InvariantError("witness reconstruction lost the path");
            }
        }
        out.witnesses.push_back(std::move(p));
    }
    return out;
}

std::vector<std::vector<int>> label_vectors(const EdgeColoring& c, const WorkBudget& budget) {
    const PathTable t = path_table(c, budget);
    const std::size_t states = t.ending.front().size();
    std::vector<std::vector<int>> out(states, std::vector<int>(static_cast<std::size_t>(c.q())));
    for (std::size_t s = 0; s < states; ++s)
        for (int col = 0; col < c.q(); ++col)
            out[s][static_cast<std::size_t>(col)] = 1 + static_cast<int>(t.ending[static_cast<std::size_t>(col)][s]);
    return out;
}

DownsetLabels downset_labels(const EdgeColoring& c, int n, int r, const WorkBudget& budget) {
    const int k = c.k();
    const int N = c.N();
    const int q = c.q();
    if (k < 2) throw InputError("down-set labels need k >= 2");
    if (r < 1 || r > k - 1) throw InputError("down-set labels: r must lie in 1..k-1");
    if (n < 1) throw InputError("down-set labels need n >= 1");
    const BinomialTable& bt = c.binomials();
    const GridBox box(n, q);
    const auto C = label_vectors(c, budget);

    DownsetLabels out;
    std::vector<std::size_t> cur(C.size());
    {
        std::vector<int> t = first_subset(k - 1);
        for (std::size_t s = 0; s < C.size(); ++s) {
            const auto& v = C[s];
            if (std::any_of(v.begin(), v.end(), [&](int x) { return x > n; })) {
                out.escaped = true;
                // ranks are visited in colex order, so t tracks rank s
                out.escape = t;
                return out;
            }
            cur[s] = box.index_of(GridPoint(v));
            if (N >= k - 1) next_colex(t, N);
        }
    }
    if (r == k - 1) {
        out.labels = std::move(cur);
        return out;
    }
    const Universe u = Universe::build(k - r + 1, box, budget);
    // labels of s-tuples live in level k-s+1
    for (int s = k - 2; s >= r; --s) {
        const int level = k - s;  // level of the (s+1)-tuple labels being closed
        const FinitePoset& p = u.poset(level);
        std::vector<Bitset> principal(p.size(), Bitset(p.size()));
        for (std::size_t i = 0; i < p.size(); ++i) {
            principal[i].set(i);
            for (auto j : p.lower_covers(i)) principal[i] |= principal[j];
        }
        const std::uint64_t count = subset_count(N, s);
        budget.check(static_cast<std::size_t>(count), "down-set labels");
        std::vector<Bitset> acc(count, Bitset(p.size()));
        if (N >= s + 1) {
            std::vector<int> e = first_subset(s + 1);
            std::size_t rank = 0;
            do {
                const std::span<const int> es(e);
                acc[rank_of(es.subspan(1), bt)] |= principal[cur[rank]];
                ++rank;
            } while (next_colex(e, N));
        }
        std::vector<std::size_t> next(count);
        for (std::size_t i = 0; i < count; ++i) {
            const auto idx = u.find(level + 1, acc[i]);
            if (!idx) throw InvariantError("down-set label is not an element of the universe");
            next[i] = *idx;
        }
        cur = std::move(next);
    }
    out.labels = std::move(cur);
    return out;
}

Certificate injectivity_certificate(const EdgeColoring& c, int n, const WorkBudget& budget) {
    if (c.k() < 2) throw InputError("injectivity certificate needs k >= 2");
    Certificate cert;
    const LongestPaths lp = longest_mono(c, budget);
    for (int col = 1; col <= c.q(); ++col) {
        if (lp.max_length[static_cast<std::size_t>(col - 1)] >= n) {
            cert.path = lp.witnesses[static_cast<std::size_t>(col - 1)];
            return cert;
        }
    }
    const DownsetLabels d = downset_labels(c, n, 1, budget);
    if (d.escaped) throw InvariantError("labels escaped the universe without a long path");
    std::map<std::size_t, int> seen;
    for (int v = 0; v < c.N(); ++v) {
        const auto [it, inserted] = seen.emplace(d.labels[static_cast<std::size_t>(v)], v);
        if (!inserted) {
            cert.collision = std::make_pair(it->second, v);
            return cert;
        }
    }
    cert.distinct = true;
    return cert;
}

bool check_extension_property(const EdgeColoring& c, const WorkBudget& budget) {
    const int k = c.k();
    const int N = c.N();
    if (N < k) return true;
    const PathTable t = path_table(c, budget);
    const BinomialTable& bt = c.binomials();
    std::vector<int> e = first_subset(k);
    std::size_t rank = 0;
    do {
        const auto& row = t.ending[static_cast<std::size_t>(c.color(rank) - 1)];
        const std::span<const int> es(e);
        if (row[rank_of(es.last(static_cast<std::size_t>(k - 1)), bt)] <=
            row[rank_of(es.first(static_cast<std::size_t>(k - 1)), bt)])
            return false;
        ++rank;
    } while (next_colex(e, N));
    return true;
}

bool check_path_label_invariant(const EdgeColoring& c, const std::vector<HyperPartition>& vertices,
                                const WorkBudget& budget) {
    if (c.k() != 3) throw InputError("path-label invariant applies to 3-uniform colorings");
    if (vertices.size() != static_cast<std::size_t>(c.N())) throw InputError("one partition per vertex required");
    const int q = c.q();
    const PathTable t = path_table(c, budget);
    const BinomialTable& bt = c.binomials();
    for (int b = 0; b < c.N(); ++b)
        for (int cc = b + 1; cc < c.N(); ++cc) {
            const std::array<int, 2> pair{b, cc};
            const auto rank = rank_of(pair, bt);
            const auto& B = vertices[static_cast<std::size_t>(b)];
            const auto& C = vertices[static_cast<std::size_t>(cc)];
            const auto f = first_difference(B, C);
            if (!f) return false;
            const std::vector<int> delta = C.index_of_cell(*f);
            for (int col = 1; col <= q; ++col) {
                const auto len = static_cast<int>(t.at(col, rank));
                if (len == 0) continue;
                const int value = col < q ? delta[static_cast<std::size_t>(col - 1)] : C.at(*f);
                if (value <= len) return false;
            }
        }
    return true;
}

bool is_monochromatic_path(const EdgeColoring& c, const MonotonePath& p) {
    const auto k = static_cast<std::size_t>(c.k());
    if (p.vertices.size() < k) return false;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        if (p.vertices[i] < 0 || p.vertices[i] >= c.N()) return false;
        if (i > 0 && p.vertices[i] <= p.vertices[i - 1]) return false;
    }
    for (std::size_t i = 0; i + k <= p.vertices.size(); ++i)
        if (c.color(std::span<const int>(p.vertices.data() + i, k)) != p.color) return false;
    return true;
}

}  // namespace hyperpath
