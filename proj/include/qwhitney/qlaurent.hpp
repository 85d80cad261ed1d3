#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qwhitney/errors.hpp"

namespace qwhitney {

/// Arbitrary-precision signed integer, the coefficient domain of the library.
using Int = boost::multiprecision::cpp_int;
/// Arbitrary-precision rational, used only inside explicit-formula routes.
using Rat = boost::multiprecision::cpp_rational;

/// Exact Laurent polynomial in the formal variable q with arbitrary-precision
/// integer coefficients.
///
/// Canonical form: stored densely as q^offset * (c[0] + c[1] q + ...) with
/// nonzero first and last coefficients; the zero polynomial is the empty
/// coefficient vector with offset 0. Structural equality therefore coincides
/// with mathematical equality. All operations return new values and never
/// mutate their inputs, so polynomials may be shared freely between threads.
class QLaurentPoly {
  public:
    /// The zero polynomial.
    QLaurentPoly() = default;

    /// Constant polynomial.
    explicit QLaurentPoly(Int c) {
        if (c != 0) {
            coeffs_.push_back(std::move(c));
        }
    }
    explicit QLaurentPoly(long long c) : QLaurentPoly(Int(c)) {}

    /// coeff * q^exp. The exponent may be negative.
    static QLaurentPoly monomial(Int coeff, int exp);

    /// Rebuild from a sparse exponent -> coefficient map (zero entries are
    /// dropped); the inverse of terms().
    static QLaurentPoly from_terms(const std::map<int, Int>& terms);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && offset_ == 0 && coeffs_[0] == 1; }

    /// Lowest exponent with nonzero coefficient. Requires a nonzero polynomial.
    int min_exp() const;
    /// Highest exponent with nonzero coefficient. Requires a nonzero polynomial.
    int max_exp() const;

    /// Coefficient of q^exp (zero when absent).
    Int coeff(int exp) const;

    /// Sparse view: exponent -> nonzero coefficient, ascending exponent.
    std::map<int, Int> terms() const;

    /// Number of nonzero terms.
    int term_count() const;

    bool has_nonnegative_coeffs() const;

    /// Value at q = 1, i.e. the sum of all coefficients.
    Int eval_at_q1() const;

    /// Value at a rational q != 0. Testing helper only; results of the
    /// library are never defined through numeric evaluation.
    Rat evaluate_at(const Rat& q) const;

    QLaurentPoly operator-() const;
    QLaurentPoly& operator+=(const QLaurentPoly& rhs) { return *this = *this + rhs; }
    QLaurentPoly& operator-=(const QLaurentPoly& rhs) { return *this = *this - rhs; }
    QLaurentPoly& operator*=(const QLaurentPoly& rhs) { return *this = *this * rhs; }

    friend QLaurentPoly operator+(const QLaurentPoly& a, const QLaurentPoly& b);
    friend QLaurentPoly operator-(const QLaurentPoly& a, const QLaurentPoly& b);
    friend QLaurentPoly operator*(const QLaurentPoly& a, const QLaurentPoly& b);

    /// exponent >= 0; DomainError otherwise.
    QLaurentPoly pow(int exponent) const;

    bool operator==(const QLaurentPoly& rhs) const = default;

    /// Canonical human-readable rendering, ascending exponents:
    /// "1+q-2q^3", "q^-1" for negative exponents, "0" for zero.
    std::string to_string() const;

    /// LaTeX rendering with braced exponents: "1+q-2q^{3}".
    std::string to_latex() const;

  private:
    int offset_ = 0;
    std::vector<Int> coeffs_;

    void trim();

    friend QLaurentPoly shift_to_zero(const QLaurentPoly& p);
    friend std::optional<QLaurentPoly> divide_exact(const QLaurentPoly& a,
                                                    const QLaurentPoly& b);
};

inline QLaurentPoly operator*(const Int& c, const QLaurentPoly& p) {
    return QLaurentPoly(c) * p;
}

/// p with its lowest exponent shifted to 0 (the "ordinary part").
QLaurentPoly shift_to_zero(const QLaurentPoly& p);

/// Exact quotient a / b, or nullopt when b does not divide a.
/// b must be nonzero. Units q^k are handled, so both Laurent inputs are fine.
std::optional<QLaurentPoly> divide_exact(const QLaurentPoly& a, const QLaurentPoly& b);

/// gcd of the coefficients, nonnegative; 0 for the zero polynomial.
Int content(const QLaurentPoly& p);

/// Polynomial gcd over Z[q] of the ordinary parts of a and b (powers of q are
/// units of the Laurent ring and never enter the gcd), including the integer
/// content and normalized to a positive leading coefficient. Computed by a
/// primitive pseudo-remainder sequence.
QLaurentPoly poly_gcd(const QLaurentPoly& a, const QLaurentPoly& b);

}  // namespace qwhitney
