#include "hyperpath/tower.hpp"

#include "hyperpath/errors.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>

namespace hyperpath {

namespace {

const Real& eps() {
    static const Real e = boost::multiprecision::ldexp(Real(1), -230);
    return e;
}

const Real& ln2() {
    static const Real v = boost::math::constants::ln_two<Real>();
    return v;
}

Real mag(const Interval& a) { return std::max(abs(a.lo), abs(a.hi)); }

Interval widen(Real lo, Real hi, const Real& scale) {
    const Real d = scale * eps();
    return {lo - d, hi + d};
}

bool is_integer(const BigRational& x) { return boost::multiprecision::denominator(x) == 1; }

// log2 of x when it is an integral power of two.
std::optional<BigRational> exact_log2(const BigRational& x) {
    if (x <= 0) return std::nullopt;
    const BigInt num = boost::multiprecision::numerator(x);
    const BigInt den = boost::multiprecision::denominator(x);
    auto pow2 = [](const BigInt& v) -> std::optional<long> {
        if (v <= 0) return std::nullopt;
        const auto e = boost::multiprecision::msb(v);
        if (boost::multiprecision::lsb(v) != e) return std::nullopt;
        return static_cast<long>(e);
    };
    const auto a = pow2(num);
    const auto b = pow2(den);
    if (!a || !b) return std::nullopt;
    return BigRational(*a - *b);
}

}  // namespace

Interval Interval::exact(const BigRational& x) {
    const Real v = Real(boost::multiprecision::numerator(x)) / Real(boost::multiprecision::denominator(x));
    if (is_integer(x) && boost::multiprecision::msb(abs(boost::multiprecision::numerator(x)) + 1) < 200) return {v, v};
    return widen(v, v, abs(v));
}

Interval Interval::point(const Real& x) { return {x, x}; }

Interval operator+(const Interval& a, const Interval& b) {
    return widen(a.lo + b.lo, a.hi + b.hi, std::max(mag(a), mag(b)));
}

Interval operator-(const Interval& a, const Interval& b) {
    return widen(a.lo - b.hi, a.hi - b.lo, std::max(mag(a), mag(b)));
}

Interval operator*(const Interval& a, const Interval& b) {
    const Real c[] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    const Real lo = *std::min_element(std::begin(c), std::end(c));
    const Real hi = *std::max_element(std::begin(c), std::end(c));
    return widen(lo, hi, std::max(abs(lo), abs(hi)));
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.lo <= 0 && b.hi >= 0) throw PreconditionError("interval division by an interval containing 0");
    const Real c[] = {a.lo / b.lo, a.lo / b.hi, a.hi / b.lo, a.hi / b.hi};
    const Real lo = *std::min_element(std::begin(c), std::end(c));
    const Real hi = *std::max_element(std::begin(c), std::end(c));
    return widen(lo, hi, std::max(abs(lo), abs(hi)));
}

Interval exp2(const Interval& x) {
    const Real lo = exp(x.lo * ln2());
    const Real hi = exp(x.hi * ln2());
    return widen(lo, hi, hi);
}

Interval log2(const Interval& x) {
    if (!x.positive()) throw PreconditionError("log2 of an interval that is not positive");
    const Real lo = log(x.lo) / ln2();
    const Real hi = log(x.hi) / ln2();
    return widen(lo, hi, std::max(abs(lo), abs(hi)) + 1);
}

Interval sqrt(const Interval& x) {
    if (x.lo < 0) throw PreconditionError("sqrt of an interval with negative part");
    const Real lo = sqrt(x.lo);
    const Real hi = sqrt(x.hi);
    return widen(lo, hi, hi);
}

Interval log2(const BigInt& v) {
    if (v <= 0) throw PreconditionError("log2 of a nonpositive integer");
    const Real r(v);
    const Real l = log(r) / ln2();
    return widen(l, l, abs(l) + 1);
}

const char* to_string(Order o) noexcept {
    switch (o) {
        case Order::less: return "less";
        case Order::equal: return "equal";
        case Order::greater: return "greater";
        case Order::undecided: return "undecided";
    }
    return "undecided";
}

Order compare(const Interval& a, const Interval& b) {
    if (a.hi < b.lo) return Order::less;
    if (a.lo > b.hi) return Order::greater;
    if (a.lo == a.hi && b.lo == b.hi && a.lo == b.lo) return Order::equal;
    return Order::undecided;
}

std::optional<BigRational> TowerScalar::exact() const {
    if (height == 1) return top;
    return std::nullopt;
}

std::string TowerScalar::str() const {
    if (height == 1) return to_decimal(top);
    return "t_" + std::to_string(height) + "(" + to_decimal(top) + ")";
}

TowerScalar tower(int h, const BigRational& x) {
    if (h < 1) throw InputError("tower height must be at least 1");
    TowerScalar t{h, x};
    while (t.height > 1 && is_integer(t.top) && t.top <= tower_materialize_bits && t.top >= -tower_materialize_bits) {
        const long e = t.top.convert_to<long>();
        BigRational v = e >= 0 ? BigRational(BigInt(1) << e) : BigRational(BigInt(1), BigInt(1) << -e);
        t = TowerScalar{t.height - 1, std::move(v)};
    }
    return t;
}

namespace {

Order flip(Order o) {
    if (o == Order::less) return Order::greater;
    if (o == Order::greater) return Order::less;
    return o;
}

Order exact_order(const BigRational& a, const BigRational& b) {
    if (a < b) return Order::less;
    if (a > b) return Order::greater;
    return Order::equal;
}

// t_m(x) against y.
Order compare_tall(int m, const BigRational& x, const BigRational& y) {
    std::optional<BigRational> exact_y = y;
    Interval iy = Interval::exact(y);
    while (m > 1) {
        // t_m(x) > 0 for m >= 2
        if (exact_y ? *exact_y <= 0 : iy.hi <= 0) return Order::greater;
        if (!exact_y && !iy.positive()) return Order::undecided;
        if (exact_y) {
            if (auto l = exact_log2(*exact_y)) {
                exact_y = *l;
                iy = Interval::exact(*l);
            } else {
                iy = log2(Interval::exact(*exact_y));
                exact_y.reset();
            }
        } else {
            iy = log2(iy);
        }
        --m;
    }
    if (exact_y) return exact_order(x, *exact_y);
    return compare(Interval::exact(x), iy);
}

}  // namespace

Order tower_compare(const TowerScalar& a0, const TowerScalar& b0) {
    TowerScalar a = tower(a0.height, a0.top);
    TowerScalar b = tower(b0.height, b0.top);
    const int common = std::min(a.height, b.height) - 1;
    a.height -= common;
    b.height -= common;
    if (a.height == 1 && b.height == 1) return exact_order(a.top, b.top);
    if (b.height == 1) return compare_tall(a.height, a.top, b.top);
    return flip(compare_tall(b.height, b.top, a.top));
}

}  // namespace hyperpath
