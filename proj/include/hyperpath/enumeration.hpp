#pragma once

#include "hyperpath/errors.hpp"
#include "hyperpath/grid.hpp"
#include "hyperpath/numeric.hpp"

#include <utility>
#include <vector>

namespace hyperpath {

// Sizes of the ranks of a graded set; sizes[i] is the size of rank offset + i.
struct RankProfile {
    int offset = 0;
    std::vector<BigInt> sizes;

    BigInt total() const;
    bool is_symmetric() const;
};

// Number of down-sets of the box, which is the number of partitions over
// its first d-1 axes with entries bounded by the last extent.
BigInt count_downsets(const GridBox& box, const WorkBudget& budget = {});

// P_1(n) = C(2n, n) and P_1(a, b) = C(a+b, a).
BigInt p1_closed(unsigned n);
BigInt p1_rect(unsigned a, unsigned b);

// Plane partitions in an a x b x c box: prod (i+j+k-1)/(i+j+k-2).
BigInt macmahon_rect(unsigned a, unsigned b, unsigned c);
inline BigInt macmahon(unsigned n) { return macmahon_rect(n, n, n); }

// Number of x in [n]^d with x_1 + ... + x_d = k.
BigInt s_count(int n, int d, int k);
RankProfile s_profile(int n, int d);
// Smallest k maximizing s_count(n, d, k), with that maximum.
std::pair<int, BigInt> middle_max(int n, int d);

// Line partitions in the n x n box counted by area 0..n^2.
RankProfile lnn_rank_sizes(int n);
BigInt lnn_max(int n);

// |P^k_d[n]| on a box; counts down-sets of the order-(k-1) universe.
BigInt count_rho(int k, const GridBox& box, const WorkBudget& budget = {});
inline BigInt count_rho(int k, int d, int n, const WorkBudget& budget = {}) {
    return count_rho(k, GridBox(n, d), budget);
}

}  // namespace hyperpath
