#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperpath {

// Malformed or out-of-range arguments supplied by a caller.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A structure that does not satisfy its defining invariant
// (a set that is not down-closed, a partition that increases, ...).
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// An operation invoked outside its domain, e.g. delta(F, F') with F containing F'.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// The configured work budget was exhausted. Never carries a partial answer.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Upper bound on memo-table entries, materialized structures or edges.
struct WorkBudget {
    static constexpr std::size_t default_entries = 10'000'000;
    std::size_t max_entries = default_entries;

    void check(std::size_t used, const char* what) const {
        if (used > max_entries) {
            throw BudgetExceeded(std::string(what) + ": work budget of " +
                                 std::to_string(max_entries) + " entries exceeded");
        }
    }
};

}  // namespace hyperpath
