#include "trialkit/contfrac.hpp"

#include <stdexcept>

namespace trialkit {

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Rational abs_diff(const Rational& a, const Rational& b) {
    Rational d = a - b;
    return d < 0 ? -d : d;
}

}  // namespace

Rational best_rational_approx(const Rational& x, const BigInt& max_den) {
    if (max_den < 1) throw std::invalid_argument("denominator bound must be >= 1");
    if (denominator(x) <= max_den) return x;

    // Convergents p/q of the continued fraction of x.
    BigInt num = numerator(x), den = denominator(x);
    BigInt p_prev = 1, q_prev = 0;  // p_{-1}/q_{-1}
    BigInt p_cur, q_cur;
    {
        BigInt a0 = floor_div(num, den);
        p_cur = a0;
        q_cur = 1;
        BigInt rem = num - a0 * den;
        num = den;
        den = rem;
    }
    while (den != 0) {
        BigInt a = num / den;  // positive from here on
        BigInt p_next = a * p_cur + p_prev;
        BigInt q_next = a * q_cur + q_prev;
        if (q_next > max_den) {
            // Best semiconvergent: largest t with q_prev + t*q_cur <= max_den.
            BigInt t = (max_den - q_prev) / q_cur;
            Rational convergent(p_cur, q_cur);
            if (t <= 0) return convergent;
            Rational semi(p_prev + t * p_cur, q_prev + t * q_cur);
            Rational d_semi = abs_diff(x, semi);
            Rational d_conv = abs_diff(x, convergent);
            if (d_semi < d_conv) return semi;
            if (d_conv < d_semi) return convergent;
            return denominator(convergent) <= denominator(semi) ? convergent : semi;
        }
        p_prev = p_cur;
        q_prev = q_cur;
        p_cur = p_next;
        q_cur = q_next;
        BigInt rem = num - a * den;
        num = den;
        den = rem;
    }
    return Rational(p_cur, q_cur);  // exact (unreachable given the early return)
}

}  // namespace trialkit
