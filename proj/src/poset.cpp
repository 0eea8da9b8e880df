#include "hyperpath/poset.hpp"

#include "state_table.hpp"

#include <algorithm>
#include <limits>
#include <cstdint>
#include <memory>

namespace hyperpath {

FinitePoset::FinitePoset(std::vector<std::vector<std::size_t>> lower_covers)
    : lower_(std::move(lower_covers)), upper_(lower_.size()) {
    for (std::size_t i = 0; i < lower_.size(); ++i) {
        std::sort(lower_[i].begin(), lower_[i].end());
        for (auto j : lower_[i]) {
            if (j >= i) throw InputError("poset elements are not numbered along a linear extension");
            upper_[j].push_back(i);
        }
    }
}

bool FinitePoset::is_ideal(const Bitset& s) const {
    if (s.size() != size()) return false;
    for (auto i = s.find_first(); i != Bitset::npos; i = s.find_next(i))
        for (auto j : lower_[i])
            if (!s.test(j)) return false;
    return true;
}

namespace {

using detail::StateTable;

// Frontier DP. An element occupies a slot from the moment it is decided
// until its last upper cover has been decided; the state is the set of
// occupied slots holding members of the ideal.
template <class Count>
bool frontier_count(const FinitePoset& p, const WorkBudget& budget, Count& result) {
    const std::size_t m = p.size();
    std::vector<std::size_t> last_use(m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (auto j : p.lower_covers(i)) last_use[j] = std::max(last_use[j], i);

    // Slot assignment. A new element takes its slot before the slots of
    // retiring covers are released, so a retiring bit is never overwritten
    // while it is still read.
    std::vector<std::size_t> slot(m, Bitset::npos);
    std::vector<std::vector<std::size_t>> retiring(m);
    std::vector<std::size_t> free_slots;
    std::size_t slot_count = 0;
    for (std::size_t i = 0; i < m; ++i) {
        for (auto j : p.lower_covers(i))
            if (last_use[j] == i) retiring[i].push_back(slot[j]);
        if (!p.upper_covers(i).empty()) {
            if (!free_slots.empty()) {
                slot[i] = free_slots.back();
                free_slots.pop_back();
            } else {
                slot[i] = slot_count++;
            }
        }
        for (auto s : retiring[i]) free_slots.push_back(s);
    }
    const std::size_t width = std::max<std::size_t>(1, (slot_count + 63) / 64);
    auto test = [](const std::uint64_t* k, std::size_t s) { return (k[s / 64] >> (s % 64)) & 1; };
    auto clear = [](std::uint64_t* k, std::size_t s) { k[s / 64] &= ~(std::uint64_t{1} << (s % 64)); };
    auto set = [](std::uint64_t* k, std::size_t s) { k[s / 64] |= std::uint64_t{1} << (s % 64); };

    auto cur = std::make_unique<StateTable<Count>>(width, "order-ideal count");
    std::vector<std::uint64_t> buf(width, 0);
    cur->add(buf.data(), Count{1}, budget);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& lower = p.lower_covers(i);
        const std::size_t my_slot = slot[i];
        auto next = std::make_unique<StateTable<Count>>(width, "order-ideal count");
        for (std::size_t e = 0; e < cur->size(); ++e) {
            const std::uint64_t* key = cur->key(e);
            bool can_include = true;
            for (auto j : lower)
                if (!test(key, slot[j])) {
                    can_include = false;
                    break;
                }
            std::copy(key, key + width, buf.begin());
            for (auto s : retiring[i]) clear(buf.data(), s);
            if (my_slot != Bitset::npos) clear(buf.data(), my_slot);
            if (!next->add(buf.data(), cur->count(e), budget)) return false;
            if (can_include) {
                if (my_slot != Bitset::npos) set(buf.data(), my_slot);
                if (!next->add(buf.data(), cur->count(e), budget)) return false;
            }
        }
        cur = std::move(next);
    }
    Count total{0};
    for (std::size_t e = 0; e < cur->size(); ++e) {
        if constexpr (std::is_same_v<Count, std::uint64_t>) {
            if (__builtin_add_overflow(total, cur->count(e), &total)) return false;
        } else {
            total += cur->count(e);
        }
    }
    result = total;
    return true;
}

}  // namespace

BigInt FinitePoset::count_ideals(const WorkBudget& budget) const {
    std::uint64_t small = 0;
    if (frontier_count<std::uint64_t>(*this, budget, small)) return BigInt(small);
    BigInt big;
    frontier_count<BigInt>(*this, budget, big);
    return big;
}

std::vector<Bitset> FinitePoset::enumerate_ideals(const WorkBudget& budget) const {
    std::vector<Bitset> out;
    Bitset cur(size());
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == size()) {
            budget.check(out.size() + 1, "order-ideal enumeration");
            out.push_back(cur);
            return;
        }
        self(self, i + 1);
        for (auto j : lower_[i])
            if (!cur.test(j)) return;
        cur.set(i);
        self(self, i + 1);
        cur.reset(i);
    };
    rec(rec, 0);
    return out;
}

FinitePoset grid_poset(const GridBox& box) {
    std::vector<std::vector<std::size_t>> lower(box.size());
    for (std::size_t i = 0; i < box.size(); ++i) {
        const GridPoint p = box.point_at(i);
        for (std::size_t t = 0; t < box.dimension(); ++t)
            if (p[t] > 1) lower[i].push_back(i - box.stride(t));
    }
    return FinitePoset(std::move(lower));
}

}  // namespace hyperpath
