#include "hyperpath/enumeration.hpp"

#include "hyperpath/combinatorics.hpp"
#include "hyperpath/higher_order.hpp"
#include "hyperpath/poset.hpp"

#include "state_table.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <memory>

namespace hyperpath {

BigInt RankProfile::total() const {
    BigInt t = 0;
    for (const auto& s : sizes) t += s;
    return t;
}

bool RankProfile::is_symmetric() const {
    return std::equal(sizes.begin(), sizes.end(), sizes.rbegin());
}

namespace {

using detail::StateTable;

// Partition-window transfer DP. Cells of the index box are filled in
// lexicographic order; the value at a cell is bounded by its neighbours
// one step back along each axis, the farthest of which lies stride_0 cells
// back. The state is therefore the window of the last stride_0 values.
template <class Count>
bool window_count(const GridBox& box, const WorkBudget& budget, Count& result) {
    const std::size_t d = box.dimension();
    const int bound = box.extents().back();
    const GridBox index(std::vector<int>(box.extents().begin(), box.extents().end() - 1));
    const std::size_t cells = index.size();
    const std::size_t window = index.stride(0);

    // one byte per window cell, packed into words
    const std::size_t width = (window + 7) / 8;
    auto cur = std::make_unique<StateTable<Count>>(width, "down-set count", 1);
    std::vector<std::uint64_t> buf(width, 0);
    auto* bytes = reinterpret_cast<unsigned char*>(buf.data());
    std::fill(bytes, bytes + window, static_cast<unsigned char>(bound));
    cur->add(buf.data(), Count{1}, budget);
    std::vector<int> coords(d - 1, 1);
    for (std::size_t c = 0; c < cells; ++c) {
        auto next = std::make_unique<StateTable<Count>>(width, "down-set count", 1);
        for (std::size_t e = 0; e < cur->size(); ++e) {
            const auto* key = reinterpret_cast<const unsigned char*>(cur->key(e));
            int upper = bound;
            for (std::size_t t = 0; t + 1 < d; ++t)
                if (coords[t] > 1) upper = std::min(upper, static_cast<int>(key[window - index.stride(t)]));
            std::memcpy(bytes, key + 1, window - 1);
            for (int v = 0; v <= upper; ++v) {
                bytes[window - 1] = static_cast<unsigned char>(v);
                if (!next->add(buf.data(), cur->count(e), budget)) return false;
            }
        }
        cur = std::move(next);
        for (std::size_t t = d - 1; t-- > 0;) {
            if (coords[t] < index.extent(t)) {
                ++coords[t];
                break;
            }
            coords[t] = 1;
        }
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

BigInt count_downsets(const GridBox& box, const WorkBudget& budget) {
    if (box.dimension() == 1) return BigInt(box.extent(0) + 1);
    if (box.extents().back() > 127) throw InputError("down-set count: last extent too large");
    std::uint64_t small = 0;
    if (window_count<std::uint64_t>(box, budget, small)) return BigInt(small);
    BigInt big;
    window_count<BigInt>(box, budget, big);
    return big;
}

BigInt p1_closed(unsigned n) { return binomial(2 * n, n); }

BigInt p1_rect(unsigned a, unsigned b) { return binomial(a + b, a); }

BigInt macmahon_rect(unsigned a, unsigned b, unsigned c) {
    if (a == 0 || b == 0 || c == 0) return 1;
    const unsigned top = a + b + c;
    // mult[s] = #{(i, j, k) in [a] x [b] x [c] : i + j + k = s}
    std::vector<BigInt> mult(top + 1, 0);
    for (unsigned i = 1; i <= a; ++i)
        for (unsigned j = 1; j <= b; ++j) {
            const unsigned lo = i + j + 1;
            for (unsigned s = lo; s < lo + c; ++s) mult[s] += 1;
        }
    std::map<unsigned, BigInt> exps;
    auto accumulate = [&](unsigned v, const BigInt& m, int sign) {
        for (unsigned p = 2; p * p <= v; ++p) {
            while (v % p == 0) {
                exps[p] += sign * m;
                v /= p;
            }
        }
        if (v > 1) exps[v] += sign * m;
    };
    for (unsigned s = 3; s <= top; ++s) {
        if (mult[s] == 0) continue;
        accumulate(s - 1, mult[s], +1);
        accumulate(s - 2, mult[s], -1);
    }
    BigInt r = 1;
    for (const auto& [p, e] : exps) {
        if (e < 0) throw InvariantError("MacMahon product is not an integer");
        r *= boost::multiprecision::pow(BigInt(p), e.convert_to<unsigned>());
    }
    return r;
}

RankProfile s_profile(int n, int d) {
    if (n < 1 || d < 1) throw InputError("s_count needs n >= 1 and d >= 1");
    // coefficients of (x + ... + x^n)^d, starting at x^d
    std::vector<BigInt> poly{1};
    for (int t = 0; t < d; ++t) {
        std::vector<BigInt> next(poly.size() + static_cast<std::size_t>(n) - 1, 0);
        for (std::size_t i = 0; i < poly.size(); ++i)
            for (int v = 0; v < n; ++v) next[i + static_cast<std::size_t>(v)] += poly[i];
        poly = std::move(next);
    }
    return RankProfile{d, std::move(poly)};
}

BigInt s_count(int n, int d, int k) {
    if (n < 1 || d < 1) throw InputError("s_count needs n >= 1 and d >= 1");
    if (k < d || k > d * n) throw InputError("s_count: k must lie in [d, d*n]");
    return s_profile(n, d).sizes[static_cast<std::size_t>(k - d)];
}

std::pair<int, BigInt> middle_max(int n, int d) {
    const RankProfile p = s_profile(n, d);
    const auto it = std::max_element(p.sizes.begin(), p.sizes.end());
    return {p.offset + static_cast<int>(it - p.sizes.begin()), *it};
}

RankProfile lnn_rank_sizes(int n) {
    if (n < 1) throw InputError("line partitions need n >= 1");
    const auto nn = static_cast<std::size_t>(n);
    const std::size_t area_max = nn * nn;
    // by_last[v][a]: prefixes ending in value v with area a
    std::vector<std::vector<BigInt>> by_last(nn + 1, std::vector<BigInt>(area_max + 1, 0));
    for (std::size_t v = 0; v <= nn; ++v) by_last[v][v] = 1;
    for (int pos = 1; pos < n; ++pos) {
        std::vector<std::vector<BigInt>> next(nn + 1, std::vector<BigInt>(area_max + 1, 0));
        for (std::size_t prev = 0; prev <= nn; ++prev)
            for (std::size_t a = 0; a <= area_max; ++a) {
                if (by_last[prev][a] == 0) continue;
                for (std::size_t v = 0; v <= prev && a + v <= area_max; ++v) next[v][a + v] += by_last[prev][a];
            }
        by_last = std::move(next);
    }
    RankProfile out{0, std::vector<BigInt>(area_max + 1, 0)};
    for (std::size_t v = 0; v <= nn; ++v)
        for (std::size_t a = 0; a <= area_max; ++a) out.sizes[a] += by_last[v][a];
    return out;
}

BigInt lnn_max(int n) {
    const RankProfile p = lnn_rank_sizes(n);
    return *std::max_element(p.sizes.begin(), p.sizes.end());
}

BigInt count_rho(int k, const GridBox& box, const WorkBudget& budget) {
    if (k < 2) throw InputError("rho needs k >= 2");
    if (k == 2) return BigInt(box.size());
    const Universe u = Universe::build(k - 1, box, budget);
    return u.poset(k - 1).count_ideals(budget);
}

}  // namespace hyperpath
