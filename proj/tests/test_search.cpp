#include "hyperpath/search.hpp"
#include "hyperpath/enumeration.hpp"
#include "hyperpath/errors.hpp"
#include "hyperpath/path_engine.hpp"

#include <doctest.h>

using namespace hyperpath;

namespace {

void check_extremal(const SearchResult& r, int n) {
    REQUIRE(r.extremal);
    CHECK(r.extremal->N() == r.colorable);
    for (int m : longest_mono(*r.extremal).max_length) CHECK(m < n);
}

}  // namespace

TEST_CASE("exact values at tiny parameters") {
    const SearchResult g = exact_ramsey(2, 2, 2, 10);
    CHECK(g.status == SearchStatus::exact);
    CHECK(g.value == 5);
    check_extremal(g, 2);
    CHECK(exact_ramsey(2, 1, 3, 10).value == 4);
    CHECK(exact_ramsey(2, 3, 2, 12).value == 9);
    CHECK(exact_ramsey(2, 2, 3, 12).value == 10);
    const SearchResult h = exact_ramsey(3, 2, 2, 10);
    CHECK(h.value == 7);
    check_extremal(h, 2);
}

TEST_CASE("search agrees with the formulas") {
    CHECK(exact_ramsey(3, 2, 2, 10).value == count_downsets(GridBox(2, 2)) + 1);
    CHECK(exact_ramsey(4, 2, 2, 12).value == count_rho(4, 2, 2) + 1);
    CHECK(exact_ramsey(5, 2, 2, 14).value == count_rho(5, 2, 2) + 1);
    CHECK(exact_ramsey(3, 1, 3, 8).value == 5);
}

TEST_CASE("both search modes agree") {
    // plain backtracking runs out of nodes from k = 4 on
    for (int k = 2; k <= 3; ++k) {
        const auto a = exact_ramsey(k, 2, 2, 12, {}, SearchMode::propagation);
        const auto b = exact_ramsey(k, 2, 2, 12, {}, SearchMode::backtracking);
        CHECK(a.value == b.value);
        CHECK(a.status == SearchStatus::exact);
    }
}

TEST_CASE("search statuses and errors") {
    const SearchResult low = exact_ramsey(3, 2, 2, 5);
    CHECK(low.status == SearchStatus::lower_bound_only);
    CHECK(low.colorable == 5);
    CHECK_FALSE(low.value);
    const SearchResult tight = exact_ramsey(2, 2, 3, 12, SearchBudget{50, 10.0});
    CHECK(tight.status == SearchStatus::budget_exhausted);
    CHECK_FALSE(tight.value);
    CHECK_THROWS_AS(exact_ramsey(3, 2, 3, 10, {}, SearchMode::propagation), InputError);
    CHECK_THROWS_AS(exact_ramsey(3, 2, 2, 0), InputError);
    CHECK(std::string(to_string(SearchStatus::exact)) == "exact");
}
