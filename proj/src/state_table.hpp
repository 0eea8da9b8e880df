#pragma once

#include "hyperpath/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <type_traits>
#include <vector>

namespace hyperpath::detail {

// Fixed-width word keys with counts, in an open-addressing table. The work
// budget bounds entries times cost, where cost defaults to the key width.
template <class Count>
class StateTable {
public:
    StateTable(std::size_t width, const char* what, std::size_t cost = 0)
        : width_(width), cost_(cost == 0 ? width : cost), what_(what) {
        rehash(64);
    }

    std::size_t size() const noexcept { return counts_.size(); }
    const std::uint64_t* key(std::size_t i) const { return keys_.data() + i * width_; }
    const Count& count(std::size_t i) const { return counts_[i]; }

    // Adds c to the entry for k; false on 64-bit overflow.
    bool add(const std::uint64_t* k, const Count& c, const WorkBudget& budget) {
        const std::size_t mask = slots_.size() - 1;
        for (std::size_t h = hash(k) & mask;; h = (h + 1) & mask) {
            const std::uint32_t e = slots_[h];
            if (e == empty) {
                budget.check((counts_.size() + 1) * cost_, what_);
                slots_[h] = static_cast<std::uint32_t>(counts_.size());
                keys_.insert(keys_.end(), k, k + width_);
                counts_.push_back(c);
                if (2 * counts_.size() > slots_.size()) rehash(2 * slots_.size());
                return true;
            }
            if (std::equal(k, k + width_, key(e))) {
                if constexpr (std::is_same_v<Count, std::uint64_t>) {
                    return !__builtin_add_overflow(counts_[e], c, &counts_[e]);
                } else {
                    counts_[e] += c;
                    return true;
                }
            }
        }
    }

private:
    static constexpr std::uint32_t empty = std::numeric_limits<std::uint32_t>::max();

    std::size_t hash(const std::uint64_t* k) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (std::size_t i = 0; i < width_; ++i) {
            h ^= k[i] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdULL;
        }
        return static_cast<std::size_t>(h ^ (h >> 32));
    }

    void rehash(std::size_t n) {
        slots_.assign(n, empty);
        const std::size_t mask = n - 1;
        for (std::size_t i = 0; i < counts_.size(); ++i) {
            std::size_t h = hash(key(i)) & mask;
            while (slots_[h] != empty) h = (h + 1) & mask;
            slots_[h] = static_cast<std::uint32_t>(i);
        }
    }

    std::size_t width_;
    std::size_t cost_;
    const char* what_;
    std::vector<std::uint64_t> keys_;
    std::vector<Count> counts_;
    std::vector<std::uint32_t> slots_;
};

}  // namespace hyperpath::detail
