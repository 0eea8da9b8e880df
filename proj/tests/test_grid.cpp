#include "hyperpath/grid.hpp"
#include "hyperpath/enumeration.hpp"
#include "hyperpath/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace hyperpath;

namespace {

std::vector<DownSet> all_downsets(const GridBox& box) {
    const auto below = oracle::strict_below(box.extents());
    std::vector<DownSet> out;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << box.size()); ++s) {
        bool closed = true;
        for (std::size_t i = 0; i < box.size(); ++i)
            if (((s >> i) & 1) && (below[i] & ~s)) closed = false;
        if (!closed) continue;
        Bitset m(box.size());
        for (std::size_t i = 0; i < box.size(); ++i)
            if ((s >> i) & 1) m.set(i);
        out.emplace_back(box, m);
    }
    return out;
}

// boxes with at most 16 cells
std::vector<GridBox> small_boxes() {
    std::vector<GridBox> out;
    for (int d = 1; d <= 4; ++d)
        for (int n = 1; n <= 16; ++n) {
            long cells = 1;
            for (int i = 0; i < d; ++i) cells *= n;
            if (cells <= 16) out.emplace_back(n, d);
        }
    out.emplace_back(std::vector<int>{2, 3});
    out.emplace_back(std::vector<int>{3, 1, 4});
    return out;
}

}  // namespace

TEST_CASE("box indexing is lexicographic with coordinate 1 most significant") {
    const GridBox box(std::vector<int>{2, 3});
    CHECK(box.size() == 6);
    CHECK(box.index_of({1, 1}) == 0);
    CHECK(box.index_of({1, 3}) == 2);
    CHECK(box.index_of({2, 1}) == 3);
    CHECK(box.point_at(5) == GridPoint{2, 3});
    CHECK(box.stride(0) == 3);
    CHECK(box.stride(1) == 1);
    CHECK_THROWS_AS(box.index_of({3, 1}), InputError);
    CHECK_THROWS_AS(GridBox(0, 2), InputError);
}

TEST_CASE("down-set to partition examples") {
    const GridBox box(2, 2);
    const std::vector<GridPoint> s{{1, 1}, {1, 2}, {2, 1}};
    CHECK(downset_to_partition(DownSet(box, s)).entries() == std::vector<int>{2, 1});
    CHECK(partition_to_downset(HyperPartition(box, {2, 1})) == DownSet(box, s));
    const std::vector<GridPoint> row{{1, 1}, {2, 1}};
    CHECK(partition_to_downset(HyperPartition(box, {1, 1})) == DownSet(box, row));
}

TEST_CASE("closure and maximal elements examples") {
    const GridBox box(2, 2);
    const std::vector<GridPoint> a{{2, 1}, {1, 2}};
    const DownSet closed = downset_closure(Antichain(box, a));
    const std::vector<GridPoint> expect{{1, 1}, {1, 2}, {2, 1}};
    CHECK(closed == DownSet(box, expect));
    CHECK(maximal_elements(closed) == Antichain(box, a));
    CHECK(maximal_elements(DownSet(box, std::vector<GridPoint>{})).size() == 0);
}

TEST_CASE("invalid structures are rejected") {
    const GridBox box(2, 2);
    CHECK_THROWS_AS(DownSet(box, std::vector<GridPoint>{{2, 2}}), InvariantError);
    CHECK_THROWS_AS(Antichain(box, std::vector<GridPoint>{{1, 1}, {2, 2}}), InvariantError);
    CHECK_THROWS_AS(HyperPartition(box, {1, 2}), InvariantError);
    CHECK_THROWS_AS(HyperPartition(box, {3, 0}), InvariantError);
    CHECK_THROWS_AS(HyperPartition(box, {1}), InputError);
    CHECK_THROWS_AS(dominates(GridPoint{1}, GridPoint{1, 2}), InputError);
}

TEST_CASE("round trips are identities on every small box") {
    for (const GridBox& box : small_boxes()) {
        CAPTURE(box.extents());
        const auto sets = all_downsets(box);
        CHECK(BigInt(sets.size()) == count_downsets(box));
        for (const DownSet& s : sets) {
            const HyperPartition p = downset_to_partition(s);
            CHECK(partition_to_downset(p) == s);
            CHECK(downset_to_partition(partition_to_downset(p)) == p);
            const Antichain a = maximal_elements(s);
            CHECK(downset_closure(a) == s);
            CHECK(maximal_elements(downset_closure(a)) == a);
        }
    }
}

TEST_CASE("all_partitions lists every partition in increasing order") {
    for (const GridBox& box : small_boxes()) {
        CAPTURE(box.extents());
        const auto parts = all_partitions(box, 1'000'000);
        CHECK(BigInt(parts.size()) == count_downsets(box));
        for (std::size_t i = 1; i < parts.size(); ++i) CHECK(lex_compare(parts[i - 1], parts[i]) == std::strong_ordering::less);
    }
    CHECK_THROWS_AS(all_partitions(GridBox(3, 3), 100), BudgetExceeded);
}

TEST_CASE("first difference and lexicographic order of partitions") {
    const GridBox box(2, 2);
    const HyperPartition a(box, {1, 0}), b(box, {1, 1});
    CHECK(first_difference(a, b) == 1);
    CHECK(lex_compare(a, b) == std::strong_ordering::less);
    CHECK_FALSE(first_difference(a, a).has_value());
}

TEST_CASE("dominance is a partial order") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coord(1, 3);
    auto pick = [&] { return GridPoint{coord(rng), coord(rng), coord(rng)}; };
    for (int t = 0; t < 5000; ++t) {
        const GridPoint x = pick(), y = pick(), z = pick();
        CHECK(dominates(x, x));
        if (dominates(x, y) && dominates(y, x)) CHECK(x == y);
        if (dominates(x, y) && dominates(y, z)) CHECK(dominates(x, z));
    }
}
