#include "qwhitney/qcalc.hpp"

namespace qwhitney {

QLaurentPoly q_number(long long x) {
    if (x < 0) {
        throw DomainError("q-bracket of negative integer " + std::to_string(x));
    }
    QLaurentPoly p;
    for (long long i = 0; i < x; ++i) {
        p += QLaurentPoly::monomial(Int(1), static_cast<int>(i));
    }
    return p;
}

QLaurentPoly q_factorial(long long x) {
    if (x < 0) {
        throw DomainError("q-factorial of negative integer " + std::to_string(x));
    }
    QLaurentPoly p(Int(1));
    for (long long j = 1; j <= x; ++j) {
        p *= q_number(j);
    }
    return p;
}

QLaurentPoly q_falling_factorial(long long x, long long n) {
    if (n < 0 || x < n) {
        throw DomainError("q-falling factorial requires x >= n >= 0, got x=" +
                          std::to_string(x) + ", n=" + std::to_string(n));
    }
    QLaurentPoly p(Int(1));
    for (long long j = 0; j < n; ++j) {
        p *= q_number(x - j);
    }
    return p;
}

Int eval_at_q1(const QLaurentPoly& p) { return p.eval_at_q1(); }

}  // namespace qwhitney
