#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace trialkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
// Extended-precision float for ellipsoid shape matrices; candidate trials and
// feasibility checks stay exact rational.
using BigFloat = boost::multiprecision::cpp_bin_float_50;

inline BigInt big_pow(BigInt base, unsigned exp) {
    BigInt r = 1;
    while (exp) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

inline BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// Smallest k >= 0 with (num/den)^k >= x, for num > den >= 1 and x >= 1.
inline std::size_t ceil_log_ratio(const BigInt& x, unsigned num, unsigned den) {
    BigInt lhs = 1, rhs = x;  // compares (num/den)^k >= x as num^k >= den^k * x
    std::size_t k = 0;
    while (lhs < rhs) {
        lhs *= num;
        rhs *= den;
        ++k;
    }
    return k;
}

// Parses "p/q", "p", or a plain decimal such as "1.4".
Rational parse_rational(const std::string& text);
std::string rational_to_string(const Rational& value);

// The exact value of the float (binary fraction), not a decimal approximation.
Rational exact_rational(const BigFloat& value);
BigFloat to_bigfloat(const Rational& value);

}  // namespace trialkit
