#pragma once

#include "hyperpath/bitset.hpp"
#include "hyperpath/errors.hpp"
#include "hyperpath/grid.hpp"
#include "hyperpath/numeric.hpp"

#include <cstddef>
#include <vector>

namespace hyperpath {

// A finite poset given by its cover relation. Elements are numbered along a
// linear extension: every lower cover of element i has an index below i.
class FinitePoset {
public:
    explicit FinitePoset(std::vector<std::vector<std::size_t>> lower_covers);

    std::size_t size() const noexcept { return lower_.size(); }
    const std::vector<std::size_t>& lower_covers(std::size_t i) const noexcept { return lower_[i]; }
    const std::vector<std::size_t>& upper_covers(std::size_t i) const noexcept { return upper_[i]; }

    bool is_ideal(const Bitset& s) const;

    // Number of order ideals (down-sets), the empty one included. The budget
    // bounds the number of frontier states alive at any step.
    BigInt count_ideals(const WorkBudget& budget = {}) const;

    // All order ideals as member bitsets, ascending in 0/1-vector order.
    std::vector<Bitset> enumerate_ideals(const WorkBudget& budget = {}) const;

private:
    std::vector<std::vector<std::size_t>> lower_;
    std::vector<std::vector<std::size_t>> upper_;
};

// The box under coordinatewise order, cells in lexicographic order.
FinitePoset grid_poset(const GridBox& box);

}  // namespace hyperpath
