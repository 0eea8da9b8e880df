#include "hyperpath/higher_order.hpp"

#include <string>

namespace hyperpath {

Universe Universe::build(int k, const GridBox& box, const WorkBudget& budget) {
    if (k < 2) throw InputError("universe order must be at least 2");
    Universe u(box);
    budget.check(box.size(), "universe");
    u.levels_.push_back(Level{grid_poset(box), {}, {}});
    std::size_t total = box.size();
    for (int j = 3; j <= k; ++j) {
        const Level& parent = u.levels_.back();
        std::vector<Bitset> ideals = parent.poset.enumerate_ideals(budget);
        total += ideals.size();
        budget.check(total, "universe");
        std::unordered_map<Bitset, std::size_t, BitsetHash> index;
        index.reserve(ideals.size());
        for (std::size_t i = 0; i < ideals.size(); ++i) index.emplace(ideals[i], i);
        // Lower covers of F are F minus one of its maximal members.
        std::vector<std::vector<std::size_t>> lower(ideals.size());
        for (std::size_t i = 0; i < ideals.size(); ++i) {
            const Bitset& f = ideals[i];
            for (auto x = f.find_first(); x != Bitset::npos; x = f.find_next(x)) {
                bool maximal = true;
                for (auto y : parent.poset.upper_covers(x))
                    if (f.test(y)) {
                        maximal = false;
                        break;
                    }
                if (!maximal) continue;
                Bitset g = f;
                g.reset(x);
                lower[i].push_back(index.at(g));
            }
        }
        u.levels_.push_back(Level{FinitePoset(std::move(lower)), std::move(ideals), std::move(index)});
    }
    return u;
}

const Universe::Level& Universe::at(int level) const {
    if (level < 2 || level > order()) throw InputError("universe level out of range");
    return levels_[static_cast<std::size_t>(level - 2)];
}

const Bitset& Universe::members(int level, std::size_t index) const {
    if (level < 3) throw InputError("grid points have no member set");
    const Level& l = at(level);
    if (index >= l.members.size()) throw InputError("universe element index out of range");
    return l.members[index];
}

std::optional<std::size_t> Universe::find(int level, const Bitset& members) const {
    const Level& l = at(level);
    const auto it = l.index.find(members);
    if (it == l.index.end()) return std::nullopt;
    return it->second;
}

bool Universe::contained(int level, std::size_t a, std::size_t b) const {
    if (level == 2) return dominates(point(a), point(b));
    return members(level, a).is_subset_of(members(level, b));
}

std::strong_ordering Universe::compare(int level, std::size_t a, std::size_t b) const {
    if (level == 2) return point(a) <=> point(b);
    return lex_compare(members(level, a), members(level, b));
}

std::size_t Universe::delta(int level, std::size_t a, std::size_t b) const {
    const std::size_t x = members(level, b).first_not_in(members(level, a));
    if (x == Bitset::npos) throw PreconditionError("delta(F, F') requires F not to contain F'");
    return x;
}

GridPoint Universe::delta_star(int level, std::span<const std::size_t> chain) const {
    if (chain.size() + 1 != static_cast<std::size_t>(level))
        throw InputError("delta_star needs level-1 elements");
    std::vector<std::size_t> cur(chain.begin(), chain.end());
    for (int j = level; j > 2; --j) {
        std::vector<std::size_t> next(cur.size() - 1);
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) next[i] = delta(j, cur[i], cur[i + 1]);
        cur = std::move(next);
    }
    return point(cur.front());
}

bool Universe::check_delta_chain(int level, std::span<const std::size_t> chain) const {
    if (level < 3) throw InputError("delta chains need level at least 3");
    if (chain.size() < 3) return true;
    std::size_t prev = delta(level, chain[0], chain[1]);
    for (std::size_t i = 1; i + 1 < chain.size(); ++i) {
        const std::size_t cur = delta(level, chain[i], chain[i + 1]);
        if (contained(level - 1, cur, prev)) return false;
        prev = cur;
    }
    return true;
}

}  // namespace hyperpath
