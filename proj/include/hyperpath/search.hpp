#pragma once

#include "hyperpath/coloring.hpp"

#include <cstdint>
#include <optional>

namespace hyperpath {

struct SearchBudget {
    std::uint64_t max_nodes = 50'000'000;
    double max_seconds = 120.0;
};

enum class SearchStatus { exact, lower_bound_only, budget_exhausted };

const char* to_string(SearchStatus s) noexcept;

enum class SearchMode {
    automatic,    // propagation when n = 2, path-length backtracking otherwise
    propagation,  // n = 2 only: consecutive edges must differ
    backtracking,
};

struct SearchResult {
    SearchStatus status = SearchStatus::budget_exhausted;
    std::optional<int> value;      // N_k(q, n) when status is exact
    int colorable = 0;             // largest N shown to admit a coloring without a long path
    std::optional<EdgeColoring> extremal;  // such a coloring on `colorable` vertices
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

// Least N <= N_max such that every q-coloring of K^k_N has a monochromatic
// monotone path of length n, decided by exhaustive search. The extremal
// coloring, when present, has been checked with the path engine.
SearchResult exact_ramsey(int k, int q, int n, int N_max, const SearchBudget& budget = {},
                          SearchMode mode = SearchMode::automatic);

// One step of the above: a coloring of K^k_N without a monochromatic
// monotone path of length n, or nullopt if none exists.
std::optional<EdgeColoring> find_avoiding_coloring(int k, int q, int n, int N, const SearchBudget& budget,
                                                   SearchMode mode, std::uint64_t& nodes, double& seconds_left);

}  // namespace hyperpath
