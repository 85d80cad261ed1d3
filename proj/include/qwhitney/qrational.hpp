#pragma once

#include "qwhitney/qlaurent.hpp"

namespace qwhitney {

/// Quotient of two Laurent polynomials in q, kept in a normalized form:
///   - numerator and denominator share no polynomial or integer factor,
///   - the denominator is an ordinary polynomial (lowest exponent 0) with a
///     positive constant term.
/// Powers of q are units of the Laurent ring and are carried by the numerator.
/// Two values compare equal exactly when they are cross-multiplication equal.
class QRationalFn {
  public:
    QRationalFn() : num_(), den_(Int(1)) {}
    explicit QRationalFn(QLaurentPoly p) : num_(std::move(p)), den_(Int(1)) {}
    QRationalFn(QLaurentPoly num, QLaurentPoly den);

    const QLaurentPoly& num() const { return num_; }
    const QLaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    /// True when the reduced denominator is 1, i.e. the value is a polynomial.
    bool is_polynomial() const { return den_.is_one(); }

    QRationalFn operator-() const;
    friend QRationalFn operator+(const QRationalFn& a, const QRationalFn& b);
    friend QRationalFn operator-(const QRationalFn& a, const QRationalFn& b);
    friend QRationalFn operator*(const QRationalFn& a, const QRationalFn& b);
    friend QRationalFn operator/(const QRationalFn& a, const QRationalFn& b);

    QRationalFn& operator+=(const QRationalFn& r) { return *this = *this + r; }
    QRationalFn& operator*=(const QRationalFn& r) { return *this = *this * r; }

    // Normalized form is canonical, so structural equality is value equality.
    bool operator==(const QRationalFn& rhs) const = default;

    std::string to_string() const;

  private:
    QLaurentPoly num_;
    QLaurentPoly den_;

    void normalize();
};

}  // namespace qwhitney
