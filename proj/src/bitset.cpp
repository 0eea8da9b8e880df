#include "hyperpath/bitset.hpp"

#include <bit>

namespace hyperpath {

std::size_t Bitset::count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool Bitset::none() const noexcept {
    for (auto w : words_)
        if (w != 0) return false;
    return true;
}

std::size_t Bitset::find_first() const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return npos;
}

std::size_t Bitset::find_next(std::size_t i) const noexcept {
    ++i;
    if (i >= size_) return npos;
    std::size_t w = i >> 6;
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (i & 63));
    while (true) {
        if (cur != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(cur));
        if (++w >= words_.size()) return npos;
        cur = words_[w];
    }
}

std::size_t Bitset::first_not_in(const Bitset& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        const std::uint64_t diff = words_[i] & ~other.words_[i];
        if (diff != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(diff));
    }
    return npos;
}

bool Bitset::is_subset_of(const Bitset& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
}

Bitset& Bitset::operator|=(const Bitset& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

Bitset& Bitset::operator&=(const Bitset& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

std::vector<std::size_t> Bitset::indices() const {
    std::vector<std::size_t> out;
    for (auto i = find_first(); i != npos; i = find_next(i)) out.push_back(i);
    return out;
}

std::size_t Bitset::hash() const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ size_;
    for (auto w : words_) {
        h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdull;
    }
    return static_cast<std::size_t>(h ^ (h >> 31));
}

std::strong_ordering lex_compare(const Bitset& a, const Bitset& b) noexcept {
    const auto wa = a.words();
    const auto wb = b.words();
    for (std::size_t i = 0; i < wa.size(); ++i) {
        const std::uint64_t x = wa[i] ^ wb[i];
        if (x != 0) {
            const auto bit = std::countr_zero(x);
            return ((wa[i] >> bit) & 1u) ? std::strong_ordering::greater : std::strong_ordering::less;
        }
    }
    return std::strong_ordering::equal;
}

}  // namespace hyperpath
