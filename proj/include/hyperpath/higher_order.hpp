#pragma once

#include "hyperpath/bitset.hpp"
#include "hyperpath/errors.hpp"
#include "hyperpath/grid.hpp"
#include "hyperpath/poset.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace hyperpath {

// The universes P^2, ..., P^k over a grid box. P^2 is the box itself and
// P^{j+1} is the set of down-sets of P^j under containment. Each level is
// stored sorted by the lexicographic order, so an element of level j is
// identified by its index there, and an element of level j >= 3 is the
// bitset of its members over level j-1.
class Universe {
public:
    static Universe build(int k, const GridBox& box, const WorkBudget& budget = {});

    int order() const noexcept { return static_cast<int>(levels_.size()) + 1; }
    const GridBox& box() const noexcept { return box_; }

    std::size_t size(int level) const { return at(level).poset.size(); }
    std::size_t size() const { return size(order()); }
    const FinitePoset& poset(int level) const { return at(level).poset; }

    GridPoint point(std::size_t index) const { return box_.point_at(index); }
    const Bitset& members(int level, std::size_t index) const;
    std::optional<std::size_t> find(int level, const Bitset& members) const;

    // a ⊆ b at the given level (≼ on grid points at level 2).
    bool contained(int level, std::size_t a, std::size_t b) const;
    // Structural comparison; agrees with index order.
    std::strong_ordering compare(int level, std::size_t a, std::size_t b) const;

    // First element of level-1 in members(b) but not in members(a).
    std::size_t delta(int level, std::size_t a, std::size_t b) const;
    // Reduces level-1 consecutive elements of the given level by repeated
    // pairwise delta, one level at a time, to a single grid point.
    GridPoint delta_star(int level, std::span<const std::size_t> chain) const;
    // delta(F1,F2) not containing delta(F2,F3), and so on along the chain.
    bool check_delta_chain(int level, std::span<const std::size_t> chain) const;

private:
    struct Level {
        FinitePoset poset;
        std::vector<Bitset> members;
        std::unordered_map<Bitset, std::size_t, BitsetHash> index;
    };

    explicit Universe(GridBox box) : box_(std::move(box)) {}
    const Level& at(int level) const;

    GridBox box_;
    std::vector<Level> levels_;  // levels_[j - 2] is level j
};

}  // namespace hyperpath
