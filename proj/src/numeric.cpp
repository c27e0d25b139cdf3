#include "trialkit/numeric.hpp"

#include <sstream>

namespace trialkit {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        return Rational(num, den);
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        std::size_t frac_len = text.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw std::invalid_argument("bad rational literal '" + text + "'");
        return Rational(BigInt(digits), big_pow(10, static_cast<unsigned>(frac_len)));
    }
    return Rational(BigInt(text));
}

std::string rational_to_string(const Rational& value) {
    std::ostringstream out;
    out << numerator(value);
    if (denominator(value) != 1) out << '/' << denominator(value);
    return out.str();
}

Rational exact_rational(const BigFloat& value) {
    return static_cast<Rational>(value);
}

BigFloat to_bigfloat(const Rational& value) {
    return static_cast<BigFloat>(value);
}

}  // namespace trialkit
