#include "qwhitney/qrational.hpp"

namespace qwhitney {

QRationalFn::QRationalFn(QLaurentPoly num, QLaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) {
        throw DivisionByZero("zero denominator in QRationalFn");
    }
    normalize();
}

void QRationalFn::normalize() {
    if (num_.is_zero()) {
        den_ = QLaurentPoly(Int(1));
        return;
    }
    // Move the q-power unit of the denominator into the numerator.
    const int den_shift = den_.min_exp();
    if (den_shift != 0) {
        den_ = shift_to_zero(den_);
        num_ = num_ * QLaurentPoly::monomial(Int(1), -den_shift);
    }
    const QLaurentPoly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = *divide_exact(num_, g);
        den_ = *divide_exact(den_, g);
        // divide_exact may leave a q-unit on the denominator again
        const int s = den_.min_exp();
        if (s != 0) {
            den_ = shift_to_zero(den_);
            num_ = num_ * QLaurentPoly::monomial(Int(1), -s);
        }
    }
    if (den_.coeff(0) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

QRationalFn QRationalFn::operator-() const {
    QRationalFn r = *this;
    r.num_ = -r.num_;
    return r;
}

QRationalFn operator+(const QRationalFn& a, const QRationalFn& b) {
    return QRationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QRationalFn operator-(const QRationalFn& a, const QRationalFn& b) { return a + (-b); }

QRationalFn operator*(const QRationalFn& a, const QRationalFn& b) {
    return QRationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

QRationalFn operator/(const QRationalFn& a, const QRationalFn& b) {
    if (b.num_.is_zero()) {
        throw DivisionByZero("division by the zero rational function");
    }
    return QRationalFn(a.num_ * b.den_, a.den_ * b.num_);
}

std::string QRationalFn::to_string() const {
    if (is_polynomial()) {
        return num_.to_string();
    }
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace qwhitney
