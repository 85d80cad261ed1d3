#pragma once

#include "qwhitney/qlaurent.hpp"

namespace qwhitney {

/// The q-integer [x]_q = 1 + q + ... + q^(x-1), with [0]_q = 0.
/// x must be nonnegative.
QLaurentPoly q_number(long long x);

/// The q-factorial [x]_q! = [x]_q [x-1]_q ... [1]_q, with [0]_q! = 1.
QLaurentPoly q_factorial(long long x);

/// The q-falling factorial of order n: prod_{j=0}^{n-1} [x-j]_q, order 0 gives 1.
/// Requires x >= n >= 0 so every factor is a q-bracket of a nonnegative integer.
QLaurentPoly q_falling_factorial(long long x, long long n);

/// Value of p at q = 1 (the sum of all coefficients).
Int eval_at_q1(const QLaurentPoly& p);

}  // namespace qwhitney
