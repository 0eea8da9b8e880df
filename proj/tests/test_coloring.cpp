#include "hyperpath/coloring.hpp"
#include "hyperpath/coloring_io.hpp"
#include "hyperpath/enumeration.hpp"
#include "hyperpath/errors.hpp"
#include "hyperpath/grid.hpp"
#include "hyperpath/path_engine.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

using namespace hyperpath;

namespace {

int vertex_of(const std::vector<HyperPartition>& parts, const std::vector<int>& entries) {
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i].entries() == entries) return static_cast<int>(i);
    return -1;
}

EdgeColoring random_coloring(int k, int q, int N, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(1, q);
    std::vector<std::uint8_t> colors(subset_count(N, k));
    for (auto& x : colors) x = static_cast<std::uint8_t>(pick(rng));
    return EdgeColoring(k, q, N, std::move(colors));
}

}  // namespace

TEST_CASE("edge colorings validate their arrays") {
    CHECK_THROWS_AS(EdgeColoring(3, 2, 4, {1, 2, 1}), InputError);
    CHECK_THROWS_AS(EdgeColoring(2, 2, 3, {1, 3, 1}), InputError);
    CHECK_THROWS_AS(EdgeColoring(0, 2, 3, {}), InputError);
    CHECK(EdgeColoring(4, 2, 3, {}).edge_count() == 0);
    const EdgeColoring m = monochromatic(3, 2, 5, 2);
    CHECK(m.edge_count() == 10);
    CHECK(m.color(std::vector<int>{0, 3, 4}) == 2);
}

TEST_CASE("graph construction examples") {
    const EdgeColoring c = color_graph_lower(2, 2);
    CHECK(c.N() == 4);
    // vertices (1,1), (1,2), (2,1), (2,2)
    CHECK(c.color(std::vector<int>{0, 1}) == 2);
    CHECK(c.color(std::vector<int>{1, 2}) == 1);
    CHECK(c.color(std::vector<int>{0, 3}) == 1);
    const EdgeColoring one = color_graph_lower(1, 3);
    CHECK(one.N() == 3);
    CHECK(longest_mono(one).max_length == std::vector<int>{2});
    REQUIRE(c.labels());
    CHECK((*c.labels())[2] == nlohmann::json::array({2, 1}));
}

TEST_CASE("3-uniform construction examples") {
    const EdgeColoring c = color_3uniform_lower(2, 2);
    CHECK(c.N() == 6);
    const auto parts = all_partitions(GridBox(2, 2), 1000);
    const int a = vertex_of(parts, {0, 0}), b = vertex_of(parts, {1, 0}), cc = vertex_of(parts, {1, 1}),
              d = vertex_of(parts, {2, 0});
    CHECK(c.color(std::vector<int>{a, b, cc}) == 1);
    CHECK(c.color(std::vector<int>{a, b, d}) == 2);
    CHECK(color_3uniform_lower(3, 2).N() == 20);
    CHECK_THROWS_AS(color_3uniform_lower(1, 2), InputError);
    CHECK_THROWS_AS(color_3uniform_lower(3, 3, WorkBudget{1000}), BudgetExceeded);
}

TEST_CASE("k-uniform construction at k = 3 is the 3-uniform one") {
    for (int q = 2; q <= 3; ++q)
        for (int n = 1; n <= (q == 2 ? 4 : 2); ++n) {
            CAPTURE(q);
            CAPTURE(n);
            CHECK(color_kuniform_lower(3, GridBox(n, q)).colors() == color_3uniform_lower(q, n).colors());
        }
}

TEST_CASE("k-uniform construction sizes") {
    const EdgeColoring c = color_kuniform_lower(4, 2);
    CHECK(c.N() == 8);
    CHECK(c.edge_count() == 70);
    for (std::size_t r = 0; r < c.edge_count(); ++r) CHECK((c.color(r) == 1 || c.color(r) == 2));
    CHECK(color_kuniform_lower(4, 1).edge_count() == 0);
    CHECK(color_kuniform_lower(4, 1).N() == 3);
    CHECK(color_kuniform_lower(5, 2).N() == 10);
    CHECK(color_kuniform_lower(4, GridBox(2, 3)).q() == 3);
}

TEST_CASE("constructions are extremal") {
    for (int n = 1; n <= 5; ++n) {
        for (int m : longest_mono(color_graph_lower(2, n)).max_length) CHECK(m <= n - 1);
        for (int m : longest_mono(color_graph_lower(3, n)).max_length) CHECK(m <= n - 1);
        for (int m : longest_mono(color_3uniform_lower(2, n)).max_length) CHECK(m <= n - 1);
    }
    for (int m : longest_mono(color_3uniform_lower(3, 2)).max_length) CHECK(m <= 1);
    for (int n = 1; n <= 3; ++n)
        for (int m : longest_mono(color_kuniform_lower(4, n)).max_length) CHECK(m <= n - 1);
    for (int m : longest_mono(color_kuniform_lower(5, 2)).max_length) CHECK(m <= 1);
    for (int m : longest_mono(color_kuniform_lower(4, GridBox(2, 3))).max_length) CHECK(m <= 1);
}

TEST_CASE("constructions are deterministic") {
    CHECK(color_3uniform_lower(2, 3) == color_3uniform_lower(2, 3));
    CHECK(color_kuniform_lower(4, 3) == color_kuniform_lower(4, 3));
}

TEST_CASE("transitivity") {
    CHECK(is_transitive(monochromatic(3, 2, 5)).transitive);
    for (int n = 1; n <= 4; ++n) CHECK(is_transitive(color_graph_lower(2, n)).transitive);
    for (int q = 2; q <= 3; ++q)
        for (int n = 2; n <= 3; ++n) {
            if (q == 3 && n == 3) continue;  // 980 vertices; covered by the acceptance run
            CHECK(is_transitive(color_3uniform_lower(q, n)).transitive);
        }
    // the k-uniform coloring at n = 3 is not transitive
    const EdgeColoring c = color_kuniform_lower(4, 3);
    const TransitivityResult r = is_transitive(c);
    CHECK_FALSE(r.transitive);
    CHECK(r.witness == oracle::transitivity_witness(c));
    CHECK(violates_transitivity(c, r.witness));
    CHECK(is_transitive(color_kuniform_lower(4, 2)).transitive);
    CHECK(oracle::transitivity_witness(color_kuniform_lower(4, 2)).empty());
}

TEST_CASE("transitivity scan agrees with brute force on random colorings") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const int k = 2 + static_cast<int>(seed % 3);
        const EdgeColoring c = random_coloring(k, 2, k + 3, seed);
        const TransitivityResult r = is_transitive(c);
        const auto w = oracle::transitivity_witness(c);
        CHECK(r.transitive == w.empty());
        if (!r.transitive) CHECK(r.witness == w);
    }
}

TEST_CASE("coloring files round-trip bit-exactly") {
    const auto dir = std::filesystem::temp_directory_path();
    for (const EdgeColoring& c : {color_3uniform_lower(2, 3), color_kuniform_lower(4, 2), random_coloring(3, 3, 7, 5)}) {
        const auto path = dir / "hyperpath_roundtrip.json";
        write_coloring(path, c);
        const EdgeColoring back = read_coloring(path);
        CHECK(back == c);
        CHECK(coloring_to_json(back).dump() == coloring_to_json(c).dump());
        std::filesystem::remove(path);
    }
}

TEST_CASE("malformed coloring files are input errors") {
    using nlohmann::json;
    const json good = coloring_to_json(monochromatic(2, 2, 3));
    CHECK(coloring_from_json(good) == monochromatic(2, 2, 3));
    json bad = good;
    bad["encoding"] = "lex";
    CHECK_THROWS_AS(coloring_from_json(bad), InputError);
    bad = good;
    bad["colors"] = json::array({1, 1});
    CHECK_THROWS_AS(coloring_from_json(bad), InputError);
    bad = good;
    bad["colors"] = json::array({1, 0, 1});
    CHECK_THROWS_AS(coloring_from_json(bad), InputError);
    bad = good;
    bad.erase("k");
    CHECK_THROWS_AS(coloring_from_json(bad), InputError);
    CHECK_THROWS_AS(coloring_from_json(json::array()), InputError);
    CHECK_THROWS_AS(read_coloring("/nonexistent/file.json"), InputError);
    const auto path = std::filesystem::temp_directory_path() / "hyperpath_garbage.json";
    std::ofstream(path) << "{not json";
    CHECK_THROWS_AS(read_coloring(path), InputError);
    std::filesystem::remove(path);
}

TEST_CASE("universe dump uses 1-based parents") {
    const Universe u = Universe::build(4, GridBox(1, 2));
    const auto j = universe_json(u, 4);
    CHECK(j.size() == 3);
    CHECK(j[0] == nlohmann::json::array());
    CHECK(j[2] == nlohmann::json::array({1, 2}));
    CHECK(universe_json(u, 2)[0] == nlohmann::json::array({1, 1}));
}
