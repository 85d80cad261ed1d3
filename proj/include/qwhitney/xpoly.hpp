#pragma once

#include <vector>

#include "qwhitney/qlaurent.hpp"

namespace qwhitney {

/// Polynomial in one formal variable X whose coefficients are Laurent
/// polynomials in q. Used to verify defining identities by expansion, with X
/// standing for [x]_q. Canonical: the leading coefficient is nonzero unless
/// the polynomial is zero.
class XPoly {
  public:
    XPoly() = default;

    static XPoly constant(QLaurentPoly c);
    /// The monomial coeff * X^power.
    static XPoly monomial(QLaurentPoly coeff, int power);
    /// The variable X itself.
    static XPoly x() { return monomial(QLaurentPoly(Int(1)), 1); }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree in X; the zero polynomial reports -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of X^i (zero when absent).
    const QLaurentPoly& coeff(int i) const;

    XPoly operator-() const;
    friend XPoly operator+(const XPoly& a, const XPoly& b);
    friend XPoly operator-(const XPoly& a, const XPoly& b);
    friend XPoly operator*(const XPoly& a, const XPoly& b);
    XPoly& operator+=(const XPoly& rhs) { return *this = *this + rhs; }
    XPoly& operator*=(const XPoly& rhs) { return *this = *this * rhs; }

    /// Multiply by X^k.
    XPoly shift(int k) const;
    /// Multiply every coefficient by s.
    XPoly scale(const QLaurentPoly& s) const;

    /// Evaluate at X = value by Horner's rule.
    QLaurentPoly substitute_scalar(const QLaurentPoly& value) const;

    bool operator==(const XPoly& rhs) const = default;

  private:
    std::vector<QLaurentPoly> coeffs_;  // index = power of X, trimmed

    void trim();
};

}  // namespace qwhitney
