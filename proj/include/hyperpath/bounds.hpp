#pragma once

#include "hyperpath/errors.hpp"
#include "hyperpath/search.hpp"
#include "hyperpath/tower.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hyperpath {

enum class Verdict { pass, fail, skipped, undecided, rate };

const char* to_string(Verdict v) noexcept;

struct SuiteEntry {
    std::string name;
    std::string anchor;  // the inequality as a formula
    std::string lhs;
    std::string rhs;
    Verdict verdict = Verdict::skipped;
    nlohmann::json params = nlohmann::json::object();
    std::string note;
};

struct SuiteConfig {
    int max_d = 4;
    int max_n = 4;
    int max_k = 5;
    WorkBudget budget{1'000'000};
    SearchBudget search{5'000'000, 20.0};
    bool run_search = true;
};

std::vector<SuiteEntry> run_inequality_suite(const SuiteConfig& config = {});

nlohmann::json suite_json(const std::vector<SuiteEntry>& entries);

}  // namespace hyperpath
