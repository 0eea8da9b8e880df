#include "hyperpath/enumeration.hpp"
#include "hyperpath/combinatorics.hpp"
#include "hyperpath/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace hyperpath;

TEST_CASE("line partitions are central binomials") {
    for (int n = 1; n <= 8; ++n) {
        CHECK(count_downsets(GridBox(n, 2)) == p1_closed(static_cast<unsigned>(n)));
        CHECK(p1_closed(static_cast<unsigned>(n)) == oracle::binomial_by_pascal(2 * n, n));
    }
    CHECK(p1_rect(1, 2) == 3);
    CHECK(count_downsets(GridBox(std::vector<int>{1, 2})) == 3);
    CHECK(count_downsets(GridBox(std::vector<int>{4, 7})) == p1_rect(4, 7));
}

TEST_CASE("plane partitions follow the box product") {
    CHECK(macmahon(1) == 2);
    CHECK(macmahon(2) == 20);
    CHECK(macmahon(3) == 980);
    CHECK(oracle::partitions_by_brute({2, 2}, 2) == 20);
    CHECK(oracle::partitions_by_brute({3, 3}, 3) == 980);
    for (int n = 1; n <= 4; ++n) {
        CHECK(count_downsets(GridBox(n, 3)) == macmahon(static_cast<unsigned>(n)));
        CHECK(macmahon(static_cast<unsigned>(n)) == oracle::macmahon_rational(n, n, n));
    }
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int c = 1; c <= 4; ++c)
                CHECK(count_downsets(GridBox(std::vector<int>{a, b, c})) ==
                      macmahon_rect(static_cast<unsigned>(a), static_cast<unsigned>(b), static_cast<unsigned>(c)));
    CHECK(macmahon(10) == oracle::macmahon_rational(10, 10, 10));
}

TEST_CASE("down-sets and antichains are equinumerous") {
    for (int d = 1; d <= 4; ++d)
        for (int n = 1; n <= 16; ++n) {
            long cells = 1;
            for (int i = 0; i < d; ++i) cells *= n;
            if (cells > 16) break;
            const GridBox box(n, d);
            CHECK(count_downsets(box) == oracle::antichain_count(box.extents()));
        }
}

TEST_CASE("Dedekind numbers") {
    const std::uint64_t expected[] = {3, 6, 20, 168, 7581};
    for (int d = 1; d <= 5; ++d) {
        const GridBox box(2, d);
        CHECK(count_downsets(box) == expected[d - 1]);
        if (d <= 4) CHECK(oracle::downsets_by_subset_scan(box.extents()) == expected[d - 1]);
    }
    CHECK(oracle::antichain_count({2, 2, 2, 2, 2}) == 7581);
}

TEST_CASE("partitions of larger boxes against brute force") {
    CHECK(count_downsets(GridBox(std::vector<int>{2, 2, 2, 3})) == oracle::partitions_by_brute({2, 2, 2}, 3));
    CHECK(count_downsets(GridBox(std::vector<int>{3, 2, 4})) == oracle::partitions_by_brute({3, 2}, 4));
    CHECK(count_downsets(GridBox(std::vector<int>{5})) == 6);
}

TEST_CASE("count_downsets respects the budget") {
    CHECK_THROWS_AS(count_downsets(GridBox(4, 4), WorkBudget{1000}), BudgetExceeded);
    CHECK(count_downsets(GridBox(3, 4)) == 17792748);
}

TEST_CASE("rank sizes of the grid") {
    CHECK(s_count(3, 3, 6) == 7);
    CHECK_THROWS_AS(s_count(3, 3, 2), InputError);
    CHECK(middle_max(2, 2) == std::pair<int, BigInt>{3, 2});
    for (int n = 1; n <= 6; ++n)
        for (int d = 1; d <= 6; ++d) {
            const RankProfile p = s_profile(n, d);
            CHECK(p.offset == d);
            CHECK(p.is_symmetric());
            CHECK(p.total() == boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(d)));
            for (int k = d; k <= d * n; ++k) CHECK(s_count(n, d, k) == s_count(n, d, d * n + d - k));
        }
}

TEST_CASE("Young's lattice rank sizes") {
    const RankProfile p = lnn_rank_sizes(2);
    CHECK(p.offset == 0);
    CHECK(p.sizes == std::vector<BigInt>{1, 1, 2, 1, 1});
    CHECK(lnn_max(2) == 2);
    for (int n = 1; n <= 8; ++n) {
        const RankProfile q = lnn_rank_sizes(n);
        CHECK(q.total() == p1_closed(static_cast<unsigned>(n)));
        CHECK(q.is_symmetric());
        CHECK(q.sizes.size() == static_cast<std::size_t>(n * n + 1));
    }
    CHECK(lnn_max(4) == 8);
}

TEST_CASE("higher order counts") {
    CHECK(count_rho(4, 2, 2) == 8);
    CHECK(count_rho(4, 2, 1) == 3);
    CHECK(count_rho(5, 2, 2) == 10);
    for (int d = 1; d <= 3; ++d)
        for (int n = 1; n <= 3; ++n) {
            CHECK(count_rho(2, d, n) == boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(d)));
            CHECK(count_rho(3, d, n) == count_downsets(GridBox(n, d)));
        }
    CHECK_THROWS_AS(count_rho(1, 2, 2), InputError);
}
