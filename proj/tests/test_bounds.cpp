#include "hyperpath/bounds.hpp"

#include <doctest.h>

#include <algorithm>

using namespace hyperpath;

namespace {

const SuiteEntry* find(const std::vector<SuiteEntry>& es, const std::string& name, const nlohmann::json& params) {
    for (const auto& e : es) {
        if (e.name != name) continue;
        bool match = true;
        for (auto it = params.begin(); it != params.end(); ++it)
            if (!e.params.contains(it.key()) || e.params[it.key()] != *it) match = false;
        if (match) return &e;
    }
    return nullptr;
}

}  // namespace

TEST_CASE("default suite has no failures") {
    const auto entries = run_inequality_suite();
    CHECK(entries.size() > 100);
    for (const auto& e : entries) {
        CAPTURE(e.name);
        CAPTURE(e.params.dump());
        CHECK(e.verdict != Verdict::fail);
        CHECK(e.verdict != Verdict::undecided);
    }
    const auto* mid = find(entries, "midrank_lemma", {{"d", 3}, {"n", 3}});
    REQUIRE(mid);
    CHECK(mid->lhs == "7");
    CHECK(mid->verdict == Verdict::pass);
    const auto* rec = find(entries, "rho_recursion", {{"k", 4}, {"d", 2}, {"n", 2}});
    REQUIRE(rec);
    CHECK(rec->lhs == "8");
    CHECK(rec->verdict == Verdict::pass);
    const auto* td = find(entries, "tower_difference", {{"k", 2}, {"a", "3"}, {"b", "2"}});
    REQUIRE(td);
    CHECK(td->verdict == Verdict::pass);
    for (const char* name : {"crude_upper", "antichain_lower", "partition_lower", "n3_sandwich_lower", "n3_sandwich_upper",
                             "rho_recursion", "tower_difference", "search_matches_formula", "plane_partition_rate"})
        CHECK(find(entries, name, nlohmann::json::object()) != nullptr);
}

TEST_CASE("suite JSON layout") {
    SuiteConfig cfg;
    cfg.max_d = 2;
    cfg.max_n = 2;
    cfg.max_k = 3;
    cfg.run_search = false;
    const auto entries = run_inequality_suite(cfg);
    const auto j = suite_json(entries);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == entries.size());
    for (const auto& e : j)
        for (const char* key : {"name", "paper_anchor", "lhs", "rhs", "verdict", "params"}) CHECK(e.contains(key));
    CHECK(std::none_of(entries.begin(), entries.end(), [](const SuiteEntry& e) { return e.name == "search_matches_formula"; }));
    CHECK(std::string(to_string(Verdict::pass)) == "PASS");
}

TEST_CASE("a tiny budget skips instead of failing") {
    SuiteConfig cfg;
    cfg.budget = WorkBudget{50};
    cfg.run_search = false;
    const auto entries = run_inequality_suite(cfg);
    CHECK(std::any_of(entries.begin(), entries.end(), [](const SuiteEntry& e) { return e.verdict == Verdict::skipped; }));
    CHECK(std::none_of(entries.begin(), entries.end(), [](const SuiteEntry& e) { return e.verdict == Verdict::fail; }));
}
