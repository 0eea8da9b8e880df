#pragma once

#include "hyperpath/numeric.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <optional>
#include <string>

namespace hyperpath {

using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<256, boost::multiprecision::digit_base_2>,
                                           boost::multiprecision::et_off>;

// Closed interval with outward-rounded endpoints.
struct Interval {
    Real lo;
    Real hi;

    static Interval exact(const BigRational& x);
    static Interval point(const Real& x);

    bool positive() const { return lo > 0; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);
Interval exp2(const Interval& x);
Interval log2(const Interval& x);  // requires x.lo > 0
Interval sqrt(const Interval& x);  // requires x.lo >= 0
// log2 of a positive integer.
Interval log2(const BigInt& v);

enum class Order { less, equal, greater, undecided };

const char* to_string(Order o) noexcept;
// Decides a vs b from intervals; undecided on overlap.
Order compare(const Interval& a, const Interval& b);

// t_1(x) = x, t_{h+1}(x) = 2^{t_h(x)}.
struct TowerScalar {
    int height = 1;
    BigRational top = 0;

    // Exact value when the tower has been materialized to height 1.
    std::optional<BigRational> exact() const;
    std::string str() const;
};

// Largest exponent materialized by tower(); above it the height is kept.
inline constexpr long tower_materialize_bits = 1L << 16;

// Normalized tower: while the top is an integer whose power of two stays
// within tower_materialize_bits, one level is folded into the top.
TowerScalar tower(int h, const BigRational& x);

// Exact when both sides materialize or reduce to equal heights; otherwise
// iterated logarithms with outward rounding, undecided if they overlap.
Order tower_compare(const TowerScalar& a, const TowerScalar& b);

}  // namespace hyperpath
