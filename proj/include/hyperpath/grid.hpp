#pragma once

#include "hyperpath/bitset.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace hyperpath {

// A point of [n_1] x ... x [n_d], coordinates 1-based.
class GridPoint {
public:
    GridPoint() = default;
    explicit GridPoint(std::vector<int> coords) : coords_(std::move(coords)) {}
    GridPoint(std::initializer_list<int> coords) : coords_(coords) {}

    std::size_t dimension() const noexcept { return coords_.size(); }
    int operator[](std::size_t i) const noexcept { return coords_[i]; }
    const std::vector<int>& coords() const noexcept { return coords_; }

    // ||x|| = x_1 + ... + x_d
    long norm() const noexcept;

    // Lexicographic, coordinate 1 most significant.
    auto operator<=>(const GridPoint&) const = default;

private:
    std::vector<int> coords_;
};

// The box [n_1] x ... x [n_d] under the coordinatewise order. Cells are
// indexed 0..size()-1 in lexicographic order of their coordinates.
class GridBox {
public:
    GridBox(int n, int d);
    explicit GridBox(std::vector<int> extents);

    std::size_t dimension() const noexcept { return extents_.size(); }
    int extent(std::size_t axis) const noexcept { return extents_[axis]; }
    const std::vector<int>& extents() const noexcept { return extents_; }
    bool is_cube() const noexcept;
    std::size_t size() const noexcept { return size_; }

    bool contains(const GridPoint& x) const noexcept;
    std::size_t index_of(const GridPoint& x) const;
    GridPoint point_at(std::size_t index) const;
    // Distance in cell indices between x and x + e_axis.
    std::size_t stride(std::size_t axis) const noexcept { return strides_[axis]; }

    bool operator==(const GridBox& other) const { return extents_ == other.extents_; }

private:
    std::vector<int> extents_;
    std::vector<std::size_t> strides_;
    std::size_t size_ = 1;
};

/// x ≼ y: x_i <= y_i for every coordinate. Throws InputError on a dimension mismatch.
bool dominates(const GridPoint& x, const GridPoint& y);

class DownSet {
public:
    DownSet(GridBox box, std::span<const GridPoint> members);
    // Mask over cell indices; validated like the member-list constructor.
    DownSet(GridBox box, Bitset mask);

    const GridBox& box() const noexcept { return box_; }
    const Bitset& mask() const noexcept { return mask_; }
    bool contains(const GridPoint& x) const { return box_.contains(x) && mask_.test(box_.index_of(x)); }
    std::size_t size() const noexcept { return mask_.count(); }
    // Members in lexicographic order.
    std::vector<GridPoint> members() const;

    bool operator==(const DownSet& other) const { return box_ == other.box_ && mask_ == other.mask_; }

private:
    GridBox box_;
    Bitset mask_;
};

class Antichain {
public:
    Antichain(GridBox box, std::span<const GridPoint> members);

    const GridBox& box() const noexcept { return box_; }
    const std::vector<GridPoint>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }

    bool operator==(const Antichain& other) const {
        return box_ == other.box_ && members_ == other.members_;
    }

private:
    GridBox box_;
    std::vector<GridPoint> members_;
};

// A (d-1)-dimensional array over [n_1] x ... x [n_{d-1}] with entries in
// 0..n_d, weakly decreasing along every axis. For d = 1 it is a single entry.
class HyperPartition {
public:
    // ambient is the d-dimensional box whose down-sets these partitions encode.
    HyperPartition(GridBox ambient, std::vector<int> entries);

    const GridBox& ambient() const noexcept { return ambient_; }
    int bound() const noexcept { return ambient_.extents().back(); }
    std::vector<int> index_extents() const;
    const std::vector<int>& entries() const noexcept { return entries_; }
    std::size_t cells() const noexcept { return entries_.size(); }
    int at(std::size_t flat) const noexcept { return entries_[flat]; }
    int at(std::span<const int> index) const;
    // Index tuple (1-based) of a flat cell position.
    std::vector<int> index_of_cell(std::size_t flat) const;

    bool operator==(const HyperPartition& other) const = default;

private:
    GridBox ambient_;
    std::vector<int> entries_;
};

HyperPartition downset_to_partition(const DownSet& s);
DownSet partition_to_downset(const HyperPartition& a);
Antichain maximal_elements(const DownSet& s);
DownSet downset_closure(const Antichain& a);

// First flat cell (lexicographic index order) where a and b differ.
std::optional<std::size_t> first_difference(const HyperPartition& a, const HyperPartition& b);
// a ⋖ b iff the entry of a at the first difference is smaller.
std::strong_ordering lex_compare(const HyperPartition& a, const HyperPartition& b);

// Every partition of the box in ⋖ order. Stops with BudgetExceeded past max_count.
std::vector<HyperPartition> all_partitions(const GridBox& ambient, std::size_t max_count);

}  // namespace hyperpath
