#pragma once

#include "hyperpath/coloring.hpp"
#include "hyperpath/errors.hpp"
#include "hyperpath/grid.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace hyperpath {

// Vertices x_1 < ... < x_{l+k-1} (0-based) whose consecutive k-windows all
// have the given color; the length l counts edges.
struct MonotonePath {
    int color = 0;
    std::vector<int> vertices;

    int length(int k) const { return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - k + 1; }
};

// L[color - 1][rank] = edges in the longest path of that color ending with
// the (k-1)-tuple of colex rank `rank`.
struct PathTable {
    int k = 0;
    int q = 0;
    int N = 0;
    std::vector<std::vector<std::uint32_t>> ending;

    std::uint32_t at(int color, std::uint64_t rank) const { return ending[static_cast<std::size_t>(color - 1)][rank]; }
};

PathTable path_table(const EdgeColoring& c, const WorkBudget& budget = {});

struct LongestPaths {
    std::vector<int> max_length;          // per color
    std::vector<MonotonePath> witnesses;  // lexicographically smallest longest path per color
};

LongestPaths longest_mono(const EdgeColoring& c, const WorkBudget& budget = {});

// C(t) = (1 + L_1(t), ..., 1 + L_q(t)) for every (k-1)-tuple t, by colex rank.
std::vector<std::vector<int>> label_vectors(const EdgeColoring& c, const WorkBudget& budget = {});

// Recursive down-set labels of the r-tuples, 1 <= r <= k-1, by colex rank.
// Each label is an index into level k-r+1 of the universe over [n]^q.
struct DownsetLabels {
    bool escaped = false;       // some C(t) left [n]^q
    std::vector<int> escape;    // a (k-1)-tuple whose label escaped
    std::vector<std::size_t> labels;
};

DownsetLabels downset_labels(const EdgeColoring& c, int n, int r, const WorkBudget& budget = {});

struct Certificate {
    bool distinct = false;
    std::optional<MonotonePath> path;                 // a path of length >= n, when one exists
    std::optional<std::pair<int, int>> collision;     // u < v with D(u) = D(v) and no long path
};

Certificate injectivity_certificate(const EdgeColoring& c, int n, const WorkBudget& budget = {});

// C(x_2..x_k)_i > C(x_1..x_{k-1})_i for every edge of color i.
bool check_extension_property(const EdgeColoring& c, const WorkBudget& budget = {});

// For the 3-uniform construction on the given vertex partitions: a path of
// length l and color i ending with B < C has delta(B,C)_i > l when i < q,
// and C_{delta(B,C)} > l when i = q.
bool check_path_label_invariant(const EdgeColoring& c, const std::vector<HyperPartition>& vertices,
                                const WorkBudget& budget = {});

// Checks that a vertex sequence is a monotone path of the stated color.
bool is_monochromatic_path(const EdgeColoring& c, const MonotonePath& p);

}  // namespace hyperpath
