#pragma once

#include "trialkit/numeric.hpp"

namespace trialkit {

// Closest rational to x with denominator <= max_den, via continued-fraction
// convergents plus the final semiconvergent. Ties to the smaller
// denominator. max_den >= 1.
Rational best_rational_approx(const Rational& x, const BigInt& max_den);

}  // namespace trialkit
