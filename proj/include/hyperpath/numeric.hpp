#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hyperpath {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline std::string to_decimal(const BigRational& v) {
    const BigInt num = boost::multiprecision::numerator(v);
    const BigInt den = boost::multiprecision::denominator(v);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
}

// Number of bits needed to write v > 0, i.e. floor(log2 v) + 1.
inline std::size_t bit_length(const BigInt& v) {
    return v <= 0 ? 0 : boost::multiprecision::msb(v) + 1;
}

}  // namespace hyperpath
