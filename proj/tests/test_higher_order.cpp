#include "hyperpath/higher_order.hpp"
#include "hyperpath/enumeration.hpp"
#include "hyperpath/errors.hpp"

#include <doctest.h>

#include <random>

using namespace hyperpath;

namespace {

// All strictly increasing index chains of the given length.
template <class F>
void for_each_chain(std::size_t size, std::size_t length, F&& f) {
    std::vector<std::size_t> c;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (c.size() == length) {
            f(std::span<const std::size_t>(c));
            return;
        }
        for (std::size_t v = from; v < size; ++v) {
            c.push_back(v);
            self(self, v + 1);
            c.pop_back();
        }
    };
    rec(rec, 0);
}

}  // namespace

TEST_CASE("small universes") {
    const Universe u = Universe::build(3, GridBox(2, 2));
    CHECK(u.size() == 6);
    CHECK(u.members(3, 0).none());
    CHECK(u.members(3, 5).count() == 4);
    CHECK(Universe::build(4, GridBox(1, 2)).size() == 3);
    CHECK(Universe::build(4, GridBox(2, 2)).size() == 8);
    CHECK_THROWS_AS(Universe::build(1, GridBox(2, 2)), InputError);
    CHECK_THROWS_AS(Universe::build(3, GridBox(3, 3), WorkBudget{100}), BudgetExceeded);
}

TEST_CASE("comparison and first difference examples") {
    const GridBox box(2, 2);
    const Universe u = Universe::build(3, box);
    Bitset a(4), b(4);
    a.set(box.index_of({1, 1}));
    b = a;
    b.set(box.index_of({2, 1}));
    const auto ia = u.find(3, a), ib = u.find(3, b);
    REQUIRE(ia);
    REQUIRE(ib);
    CHECK(u.compare(3, *ia, *ib) == std::strong_ordering::less);
    CHECK(u.point(u.delta(3, *ia, *ib)) == GridPoint{2, 1});
    CHECK_THROWS_AS(u.delta(3, *ib, *ia), PreconditionError);
}

TEST_CASE("delta star on the one-cell box") {
    const Universe u = Universe::build(4, GridBox(1, 2));
    // level 3: L0 = {}, L1 = {(1,1)}; level 4: {}, {L0}, {L0, L1}
    const std::vector<std::size_t> chain{0, 1, 2};
    CHECK(u.delta_star(4, chain) == GridPoint{1, 1});
    CHECK_THROWS_AS(u.delta_star(4, std::vector<std::size_t>{0, 1}), InputError);
}

TEST_CASE("universe orders are strict total orders extending containment") {
    const std::vector<std::pair<int, GridBox>> cases{{3, GridBox(2, 2)}, {4, GridBox(2, 2)}, {5, GridBox(2, 2)},
                                                       {3, GridBox(3, 2)}, {4, GridBox(3, 2)}, {3, GridBox(2, 3)},
                                                       {4, GridBox(1, 3)}};
    for (const auto& [k, box] : cases) {
        const Universe u = Universe::build(k, box);
        REQUIRE(u.size() <= 70);
        for (int level = 3; level <= k; ++level) {
            const std::size_t m = u.size(level);
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < m; ++b) {
                    const auto o = u.compare(level, a, b);
                    CHECK(o == (a <=> b));
                    CHECK((o == std::strong_ordering::equal) == (u.members(level, a) == u.members(level, b)));
                    if (u.contained(level, a, b)) CHECK(a <= b);
                    // sorted elements never contain their successors
                    if (a < b) {
                        CHECK_FALSE(u.contained(level, b, a));
                        const std::size_t x = u.delta(level, a, b);
                        CHECK(u.members(level, b).test(x));
                        CHECK_FALSE(u.members(level, a).test(x));
                    }
                }
        }
    }
}

TEST_CASE("delta chains along increasing chains") {
    for (const auto& [k, box] : std::vector<std::pair<int, GridBox>>{{3, GridBox(2, 2)}, {4, GridBox(2, 2)}, {5, GridBox(2, 2)},
                                                                     {3, GridBox(3, 2)}, {3, GridBox(2, 3)}}) {
        const Universe u = Universe::build(k, box);
        if (u.size() > 20) continue;
        for (std::size_t len = 2; len <= std::min<std::size_t>(u.size(), 6); ++len)
            for_each_chain(u.size(), len, [&](std::span<const std::size_t> c) { CHECK(u.check_delta_chain(k, c)); });
    }
    // randomized on a larger universe
    const Universe big = Universe::build(4, GridBox(3, 2));
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> pick(0, big.size() - 1);
    for (int t = 0; t < 2000; ++t) {
        std::vector<std::size_t> c{pick(rng), pick(rng), pick(rng), pick(rng)};
        std::sort(c.begin(), c.end());
        if (std::adjacent_find(c.begin(), c.end()) != c.end()) continue;
        CHECK(big.check_delta_chain(4, c));
    }
}

TEST_CASE("delta star of increasing triples in the order-4 universe") {
    const Universe u = Universe::build(4, GridBox(2, 2));
    for_each_chain(u.size(), 3, [&](std::span<const std::size_t> c) {
        const GridPoint x = u.delta_star(4, c);
        CHECK(u.box().contains(x));
    });
}
