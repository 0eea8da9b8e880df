#include "hyperpath/combinatorics.hpp"

#include "hyperpath/errors.hpp"

#include <limits>
#include <numeric>

namespace hyperpath {

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BinomialTable::BinomialTable(int max_n, int max_k)
    : max_n_(max_n), max_k_(max_k), stride_(static_cast<std::size_t>(max_k) + 1),
      table_((static_cast<std::size_t>(max_n) + 1) * stride_, 0) {
    constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
    for (int n = 0; n <= max_n; ++n) {
        table_[static_cast<std::size_t>(n) * stride_] = 1;
        for (int k = 1; k <= std::min(n, max_k); ++k) {
            const auto a = (*this)(n - 1, k - 1);
            const auto b = (*this)(n - 1, k);
            table_[static_cast<std::size_t>(n) * stride_ + static_cast<std::size_t>(k)] =
                (a > cap - b) ? cap : a + b;
        }
    }
}

bool next_colex(std::vector<int>& v, int N) noexcept {
    const int k = static_cast<int>(v.size());
    for (int i = 0; i < k; ++i) {
        const int limit = (i + 1 < k) ? v[i + 1] : N;
        if (v[i] + 1 < limit) {
            ++v[i];
            for (int j = 0; j < i; ++j) v[j] = j;
            return true;
        }
    }
    return false;
}

bool next_lex(std::vector<int>& v, int N) noexcept {
    const int k = static_cast<int>(v.size());
    for (int i = k - 1; i >= 0; --i) {
        if (v[i] < N - k + i) {
            ++v[i];
            for (int j = i + 1; j < k; ++j) v[j] = v[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<int> first_subset(int k) {
    std::vector<int> v(static_cast<std::size_t>(k));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

std::uint64_t subset_count(int N, int k) {
    const BigInt c = binomial(static_cast<unsigned>(std::max(N, 0)), static_cast<unsigned>(std::max(k, 0)));
    if (c > std::numeric_limits<std::uint64_t>::max() / 2)
        throw InputError("C(" + std::to_string(N) + "," + std::to_string(k) + ") does not fit in 64 bits");
    return static_cast<std::uint64_t>(c);
}

}  // namespace hyperpath
