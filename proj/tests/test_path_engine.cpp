#include "hyperpath/path_engine.hpp"
#include "hyperpath/combinatorics.hpp"
#include "hyperpath/enumeration.hpp"
#include "hyperpath/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace hyperpath;

namespace {

EdgeColoring coloring_from_bits(int k, int N, std::uint64_t bits) {
    std::vector<std::uint8_t> colors(subset_count(N, k));
    for (std::size_t i = 0; i < colors.size(); ++i) colors[i] = static_cast<std::uint8_t>(1 + ((bits >> i) & 1));
    return EdgeColoring(k, 2, N, std::move(colors));
}

EdgeColoring random_coloring(int k, int q, int N, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(1, q);
    std::vector<std::uint8_t> colors(subset_count(N, k));
    for (auto& x : colors) x = static_cast<std::uint8_t>(pick(rng));
    return EdgeColoring(k, q, N, std::move(colors));
}

void check_witnesses(const EdgeColoring& c, const LongestPaths& lp) {
    for (int col = 1; col <= c.q(); ++col) {
        const auto& w = lp.witnesses[static_cast<std::size_t>(col - 1)];
        const int len = lp.max_length[static_cast<std::size_t>(col - 1)];
        if (len == 0) continue;
        CHECK(w.color == col);
        CHECK(w.length(c.k()) == len);
        CHECK(is_monochromatic_path(c, w));
    }
}

}  // namespace

TEST_CASE("longest paths in small cases") {
    const LongestPaths black = longest_mono(monochromatic(3, 2, 5));
    CHECK(black.max_length == std::vector<int>{3, 0});
    CHECK(black.witnesses[0].vertices == std::vector<int>{0, 1, 2, 3, 4});
    for (int m : longest_mono(color_3uniform_lower(2, 2)).max_length) CHECK(m <= 1);
    for (int m : longest_mono(color_graph_lower(2, 2)).max_length) CHECK(m <= 1);
    CHECK(longest_mono(monochromatic(3, 1, 2)).max_length == std::vector<int>{0});
}

TEST_CASE("the DP matches exhaustive path enumeration on every small coloring") {
    // all 2-colorings with at most 18 edge slots
    const std::vector<std::pair<int, int>> shapes{{2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {4, 5}, {4, 6}, {1, 10}};
    for (const auto& [k, N] : shapes) {
        const std::uint64_t m = subset_count(N, k);
        REQUIRE(m <= 18);
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
            const EdgeColoring c = coloring_from_bits(k, N, bits);
            const LongestPaths lp = longest_mono(c);
            const auto expect = oracle::longest_by_enumeration(c);
            if (lp.max_length != expect) {
                CAPTURE(k);
                CAPTURE(N);
                CAPTURE(bits);
                CHECK(lp.max_length == expect);
            }
        }
    }
}

TEST_CASE("witnesses are valid and lexicographically first") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        const int k = 2 + t % 3;
        const EdgeColoring c = random_coloring(k, 3, 9, rng);
        const LongestPaths lp = longest_mono(c);
        check_witnesses(c, lp);
        CHECK(lp.max_length == oracle::longest_by_enumeration(c));
    }
    // the first black path of length 2 in the all-black K^3_6
    const LongestPaths lp = longest_mono(monochromatic(3, 2, 6));
    CHECK(lp.witnesses[0].vertices == std::vector<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("label vectors") {
    const auto single = label_vectors(monochromatic(3, 2, 2));
    REQUIRE(single.size() == 1);
    CHECK(single[0] == std::vector<int>{1, 1});
    // the pair {3,4} (1-based) has colex rank C(2,1) + C(3,2) = 5
    const auto black = label_vectors(monochromatic(3, 2, 4));
    CHECK(black[5] == std::vector<int>{3, 1});
    std::mt19937_64 rng(9);
    for (int t = 0; t < 50; ++t) {
        const EdgeColoring c = random_coloring(3, 2, 7, rng);
        const auto labels = label_vectors(c);
        const auto lp = longest_mono(c);
        for (int col = 0; col < 2; ++col) {
            int top = 0;
            for (const auto& v : labels) top = std::max(top, v[static_cast<std::size_t>(col)]);
            CHECK(top == 1 + lp.max_length[static_cast<std::size_t>(col)]);
        }
        CHECK(check_extension_property(c));
    }
}

TEST_CASE("extension property on every construction") {
    CHECK(check_extension_property(color_3uniform_lower(2, 3)));
    CHECK(check_extension_property(color_3uniform_lower(3, 2)));
    CHECK(check_extension_property(color_kuniform_lower(4, 2)));
    CHECK(check_extension_property(color_kuniform_lower(4, 3)));
    CHECK(check_extension_property(color_graph_lower(3, 3)));
}

TEST_CASE("down-set labels") {
    const EdgeColoring c = color_3uniform_lower(2, 2);
    const DownsetLabels d = downset_labels(c, 2, 1);
    CHECK_FALSE(d.escaped);
    REQUIRE(d.labels.size() == 6);
    CHECK(std::set<std::size_t>(d.labels.begin(), d.labels.end()).size() == 6);
    CHECK(d.labels[0] == 0);
    // graphs: the label of a vertex is its grid point
    const EdgeColoring g = color_graph_lower(2, 3);
    const DownsetLabels dg = downset_labels(g, 3, 1);
    for (std::size_t v = 0; v < dg.labels.size(); ++v) CHECK(dg.labels[v] == v);
    const DownsetLabels esc = downset_labels(monochromatic(3, 2, 5), 2, 1);
    CHECK(esc.escaped);
    CHECK(esc.escape.size() == 2);
    CHECK_THROWS_AS(downset_labels(c, 2, 3), InputError);
}

TEST_CASE("injectivity certificates") {
    const Certificate ok = injectivity_certificate(color_3uniform_lower(2, 3), 3);
    CHECK(ok.distinct);
    CHECK(injectivity_certificate(color_kuniform_lower(4, 2), 2).distinct);
    CHECK(injectivity_certificate(color_kuniform_lower(5, 2), 2).distinct);
    const Certificate black = injectivity_certificate(monochromatic(3, 2, 6), 2);
    REQUIRE(black.path);
    CHECK(black.path->length(3) >= 2);
    std::mt19937_64 rng(1);
    for (int t = 0; t < 300; ++t) {
        const EdgeColoring c = random_coloring(3, 2, 7, rng);
        const Certificate cert = injectivity_certificate(c, 2);
        REQUIRE(cert.path);
        CHECK(is_monochromatic_path(c, *cert.path));
        CHECK(cert.path->length(3) >= 2);
    }
}

TEST_CASE("path-label invariant of the 3-uniform construction") {
    for (const auto& [q, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}}) {
        const GridBox box(n, q);
        const auto parts = all_partitions(box, 100000);
        CHECK(check_path_label_invariant(color_3uniform_lower(box), parts));
    }
}

TEST_CASE("path checks and budgets") {
    const EdgeColoring c = monochromatic(3, 2, 5);
    CHECK(is_monochromatic_path(c, MonotonePath{1, {0, 2, 4}}));
    CHECK_FALSE(is_monochromatic_path(c, MonotonePath{2, {0, 2, 4}}));
    CHECK_FALSE(is_monochromatic_path(c, MonotonePath{1, {0, 4, 2}}));
    CHECK_THROWS_AS(longest_mono(monochromatic(3, 2, 200), WorkBudget{1000}), BudgetExceeded);
}
