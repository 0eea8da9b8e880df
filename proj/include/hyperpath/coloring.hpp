#pragma once

#include "hyperpath/combinatorics.hpp"
#include "hyperpath/errors.hpp"
#include "hyperpath/grid.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hyperpath {

// A q-coloring of the k-subsets of {1..N}. Colors are 1..q, stored by the
// colex rank of the sorted subset. Vertices in the API are 0-based.
class EdgeColoring {
public:
    EdgeColoring(int k, int q, int N, std::vector<std::uint8_t> colors);

    int k() const noexcept { return k_; }
    int q() const noexcept { return q_; }
    int N() const noexcept { return N_; }
    std::size_t edge_count() const noexcept { return colors_.size(); }
    const std::vector<std::uint8_t>& colors() const noexcept { return colors_; }

    int color(std::size_t rank) const noexcept { return colors_[rank]; }
    int color(std::span<const int> edge) const noexcept { return colors_[colex_rank(edge, table_)]; }
    const BinomialTable& binomials() const noexcept { return table_; }

    // One JSON value per vertex describing the structure it stands for.
    const std::optional<std::vector<nlohmann::json>>& labels() const noexcept { return labels_; }
    void set_labels(std::vector<nlohmann::json> labels);

    bool operator==(const EdgeColoring& other) const {
        return k_ == other.k_ && q_ == other.q_ && N_ == other.N_ && colors_ == other.colors_ &&
               labels_ == other.labels_;
    }

private:
    int k_;
    int q_;
    int N_;
    BinomialTable table_;
    std::vector<std::uint8_t> colors_;
    std::optional<std::vector<nlohmann::json>> labels_;
};

EdgeColoring monochromatic(int k, int q, int N, int color = 1);

// Vertices [n_1] x ... x [n_q] in lexicographic order; the edge x < y gets
// the first coordinate with x_i < y_i.
EdgeColoring color_graph_lower(const GridBox& box, const WorkBudget& budget = {});
inline EdgeColoring color_graph_lower(int q, int n, const WorkBudget& budget = {}) {
    return color_graph_lower(GridBox(n, q), budget);
}

// Vertices are the partitions encoded by the q-dimensional box (index box of
// dimension q-1), sorted lexicographically. A < B < C gets the smallest i
// with delta(B,C)_i > delta(A,B)_i, and color q if there is none.
EdgeColoring color_3uniform_lower(const GridBox& box, const WorkBudget& budget = {});
inline EdgeColoring color_3uniform_lower(int q, int n, const WorkBudget& budget = {}) {
    if (q < 2) throw InputError("3-uniform construction needs q >= 2");
    return color_3uniform_lower(GridBox(n, q), budget);
}

// Vertices are the elements of P^k over the box, sorted. The edge F_1..F_k
// gets the first coordinate where delta*(F_2..F_k) exceeds delta*(F_1..F_{k-1}).
EdgeColoring color_kuniform_lower(int k, const GridBox& box, const WorkBudget& budget = {});
inline EdgeColoring color_kuniform_lower(int k, int n, int d = 2, const WorkBudget& budget = {}) {
    return color_kuniform_lower(k, GridBox(n, d), budget);
}

struct TransitivityResult {
    bool transitive = true;
    // First violating (k+1)-tuple in lexicographic order, 0-based.
    std::vector<int> witness;
};

TransitivityResult is_transitive(const EdgeColoring& c, const WorkBudget& budget = {});
// Direct check of the defining condition on one (k+1)-tuple.
bool violates_transitivity(const EdgeColoring& c, std::span<const int> tuple);

}  // namespace hyperpath
