#pragma once

#include "hyperpath/numeric.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace hyperpath {

BigInt binomial(unsigned n, unsigned k);

// Pascal table of C(i, j) for 0 <= i <= max_n, 0 <= j <= max_k in 64 bits.
// Entries that would overflow saturate at UINT64_MAX.
class BinomialTable {
public:
    BinomialTable(int max_n, int max_k);

    std::uint64_t operator()(int n, int k) const noexcept {
        if (k < 0 || n < 0 || k > n) return 0;
        return table_[static_cast<std::size_t>(n) * stride_ + static_cast<std::size_t>(k)];
    }
    int max_n() const noexcept { return max_n_; }
    int max_k() const noexcept { return max_k_; }

private:
    int max_n_;
    int max_k_;
    std::size_t stride_;
    std::vector<std::uint64_t> table_;
};

// Colexicographic rank of a strictly increasing tuple of 0-based vertices:
// sum_i C(v_i, i+1). Ranks of k-subsets of {0..N-1} are 0..C(N,k)-1 and
// increase with the largest element first.
inline std::uint64_t colex_rank(std::span<const int> v, const BinomialTable& c) noexcept {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < v.size(); ++i) r += c(v[i], static_cast<int>(i) + 1);
    return r;
}

// Advances v (strictly increasing, values < N) to the next subset in
// colex order; returns false after the last one.
bool next_colex(std::vector<int>& v, int N) noexcept;

// Advances v to the next subset in lexicographic order.
bool next_lex(std::vector<int>& v, int N) noexcept;

// First subset {0, 1, ..., k-1}.
std::vector<int> first_subset(int k);

// C(N, k) as a 64-bit count; throws InputError if it does not fit.
std::uint64_t subset_count(int N, int k);

}  // namespace hyperpath
