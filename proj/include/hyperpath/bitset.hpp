#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace hyperpath {

// Fixed-size bit vector. Index 0 is the most significant position for
// lex_compare, which makes it the 0/1-vector view of a subset of an
// ordered ground set.
class Bitset {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const noexcept { return size_; }

    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t count() const noexcept;
    bool none() const noexcept;
    bool any() const noexcept { return !none(); }

    std::size_t find_first() const noexcept;
    std::size_t find_next(std::size_t i) const noexcept;

    // First index set in *this and clear in other, or npos.
    std::size_t first_not_in(const Bitset& other) const noexcept;
    bool is_subset_of(const Bitset& other) const noexcept;

    Bitset& operator|=(const Bitset& other) noexcept;
    Bitset& operator&=(const Bitset& other) noexcept;

    std::vector<std::size_t> indices() const;
    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::size_t hash() const noexcept;

    bool operator==(const Bitset& other) const = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

// Order of 0/1 vectors: at the first differing index, the vector holding
// the 1 is the greater one. Sizes must agree.
std::strong_ordering lex_compare(const Bitset& a, const Bitset& b) noexcept;

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const noexcept { return b.hash(); }
};

}  // namespace hyperpath
