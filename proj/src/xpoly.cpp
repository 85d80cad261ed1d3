#include "qwhitney/xpoly.hpp"

namespace qwhitney {

namespace {
const QLaurentPoly kZero{};
}

void XPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

XPoly XPoly::constant(QLaurentPoly c) {
    XPoly p;
    if (!c.is_zero()) {
        p.coeffs_.push_back(std::move(c));
    }
    return p;
}

XPoly XPoly::monomial(QLaurentPoly coeff, int power) {
    XPoly p;
    if (!coeff.is_zero()) {
        p.coeffs_.assign(static_cast<std::size_t>(power) + 1, QLaurentPoly());
        p.coeffs_.back() = std::move(coeff);
    }
    return p;
}

const QLaurentPoly& XPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) {
        return kZero;
    }
    return coeffs_[static_cast<std::size_t>(i)];
}

XPoly XPoly::operator-() const {
    XPoly r = *this;
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

XPoly operator+(const XPoly& a, const XPoly& b) {
    XPoly r;
    r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
        r.coeffs_[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    }
    r.trim();
    return r;
}

XPoly operator-(const XPoly& a, const XPoly& b) { return a + (-b); }

XPoly operator*(const XPoly& a, const XPoly& b) {
    if (a.is_zero() || b.is_zero()) {
        return XPoly();
    }
    XPoly r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, QLaurentPoly());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    r.trim();
    return r;
}

XPoly XPoly::shift(int k) const {
    if (k < 0) {
        throw DomainError("negative X-shift " + std::to_string(k));
    }
    if (is_zero()) {
        return XPoly();
    }
    XPoly r;
    r.coeffs_.assign(static_cast<std::size_t>(k), QLaurentPoly());
    r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return r;
}

XPoly XPoly::scale(const QLaurentPoly& s) const {
    XPoly r;
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        r.coeffs_.push_back(c * s);
    }
    r.trim();
    return r;
}

QLaurentPoly XPoly::substitute_scalar(const QLaurentPoly& value) const {
    QLaurentPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * value + *it;
    }
    return acc;
}

}  // namespace qwhitney
