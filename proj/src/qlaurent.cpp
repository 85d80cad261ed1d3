#include "qwhitney/qlaurent.hpp"

#include <algorithm>
#include <sstream>

namespace qwhitney {

void QLaurentPoly::trim() {
    std::size_t lo = 0;
    while (lo < coeffs_.size() && coeffs_[lo] == 0) {
        ++lo;
    }
    std::size_t hi = coeffs_.size();
    while (hi > lo && coeffs_[hi - 1] == 0) {
        --hi;
    }
    if (lo == hi) {
        coeffs_.clear();
        offset_ = 0;
        return;
    }
    if (lo > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lo));
        offset_ += static_cast<int>(lo);
    }
    coeffs_.resize(hi - lo);
}

QLaurentPoly QLaurentPoly::monomial(Int coeff, int exp) {
    QLaurentPoly p;
    if (coeff != 0) {
        p.offset_ = exp;
        p.coeffs_.push_back(std::move(coeff));
    }
    return p;
}

QLaurentPoly QLaurentPoly::from_terms(const std::map<int, Int>& terms) {
    QLaurentPoly p;
    for (const auto& [exp, c] : terms) {
        if (c != 0) {
            p += monomial(c, exp);
        }
    }
    return p;
}

int QLaurentPoly::min_exp() const {
    if (is_zero()) {
        throw DomainError("min_exp of the zero polynomial");
    }
    return offset_;
}

int QLaurentPoly::max_exp() const {
    if (is_zero()) {
        throw DomainError("max_exp of the zero polynomial");
    }
    return offset_ + static_cast<int>(coeffs_.size()) - 1;
}

Int QLaurentPoly::coeff(int exp) const {
    const int i = exp - offset_;
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) {
        return Int(0);
    }
    return coeffs_[static_cast<std::size_t>(i)];
}

std::map<int, Int> QLaurentPoly::terms() const {
    std::map<int, Int> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) {
            out.emplace(offset_ + static_cast<int>(i), coeffs_[i]);
        }
    }
    return out;
}

int QLaurentPoly::term_count() const {
    int n = 0;
    for (const auto& c : coeffs_) {
        if (c != 0) {
            ++n;
        }
    }
    return n;
}

bool QLaurentPoly::has_nonnegative_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c >= 0; });
}

Int QLaurentPoly::eval_at_q1() const {
    Int s = 0;
    for (const auto& c : coeffs_) {
        s += c;
    }
    return s;
}

Rat QLaurentPoly::evaluate_at(const Rat& q) const {
    if (q == 0) {
        throw DomainError("evaluation of a Laurent polynomial at q = 0");
    }
    // Horner on the ordinary part, then the q^offset unit.
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * q + Rat(*it);
    }
    Rat unit = 1;
    const Rat base = offset_ >= 0 ? q : Rat(1) / q;
    for (int i = 0; i < std::abs(offset_); ++i) {
        unit *= base;
    }
    return acc * unit;
}

QLaurentPoly QLaurentPoly::operator-() const {
    QLaurentPoly r = *this;
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

QLaurentPoly operator+(const QLaurentPoly& a, const QLaurentPoly& b) {
    if (a.is_zero()) {
        return b;
    }
    if (b.is_zero()) {
        return a;
    }
    const int lo = std::min(a.offset_, b.offset_);
    const int hi = std::max(a.offset_ + static_cast<int>(a.coeffs_.size()),
                            b.offset_ + static_cast<int>(b.coeffs_.size()));
    QLaurentPoly r;
    r.offset_ = lo;
    r.coeffs_.assign(static_cast<std::size_t>(hi - lo), Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        r.coeffs_[static_cast<std::size_t>(a.offset_ - lo) + i] += a.coeffs_[i];
    }
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
        r.coeffs_[static_cast<std::size_t>(b.offset_ - lo) + i] += b.coeffs_[i];
    }
    r.trim();
    return r;
}

QLaurentPoly operator-(const QLaurentPoly& a, const QLaurentPoly& b) {
    return a + (-b);
}

QLaurentPoly operator*(const QLaurentPoly& a, const QLaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) {
        return QLaurentPoly();
    }
    QLaurentPoly r;
    r.offset_ = a.offset_ + b.offset_;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    r.trim();
    return r;
}

QLaurentPoly QLaurentPoly::pow(int exponent) const {
    if (exponent < 0) {
        throw DomainError("negative polynomial exponent " + std::to_string(exponent));
    }
    QLaurentPoly result(Int(1));
    QLaurentPoly base = *this;
    int e = exponent;
    while (e > 0) {
        if (e & 1) {
            result *= base;
        }
        e >>= 1;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

QLaurentPoly shift_to_zero(const QLaurentPoly& p) {
    QLaurentPoly r = p;
    r.offset_ = 0;
    return r;
}

std::optional<QLaurentPoly> divide_exact(const QLaurentPoly& a, const QLaurentPoly& b) {
    if (b.is_zero()) {
        return std::nullopt;
    }
    if (a.is_zero()) {
        return QLaurentPoly();
    }
    if (a.coeffs_.size() < b.coeffs_.size()) {
        return std::nullopt;
    }
    std::vector<Int> rem = a.coeffs_;
    const std::vector<Int>& d = b.coeffs_;
    const std::size_t qn = rem.size() - d.size() + 1;
    std::vector<Int> quot(qn, Int(0));
    const Int& lead = d.back();
    for (std::size_t i = qn; i-- > 0;) {
        Int& top = rem[i + d.size() - 1];
        if (top == 0) {
            continue;
        }
        if (top % lead != 0) {
            return std::nullopt;
        }
        Int t = top / lead;
        for (std::size_t j = 0; j < d.size(); ++j) {
            rem[i + j] -= t * d[j];
        }
        quot[i] = std::move(t);
    }
    for (const auto& c : rem) {
        if (c != 0) {
            return std::nullopt;
        }
    }
    QLaurentPoly q;
    q.offset_ = a.offset_ - b.offset_;
    q.coeffs_ = std::move(quot);
    q.trim();
    return q;
}

Int content(const QLaurentPoly& p) {
    Int g = 0;
    for (const auto& [exp, c] : p.terms()) {
        (void)exp;
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) {
            break;
        }
    }
    return g;
}

namespace {

QLaurentPoly primitive_part(const QLaurentPoly& p) {
    const Int c = content(p);
    if (c == 0 || c == 1) {
        return p;
    }
    auto q = divide_exact(p, QLaurentPoly(c));
    return *q;  // content always divides exactly
}

// Pseudo-remainder built by eliminating the leading term; the result differs
// from rem(a, b) by a power of lc(b), which the primitive reduction removes.
QLaurentPoly pseudo_rem(QLaurentPoly a, const QLaurentPoly& b) {
    const Int lead = b.coeff(b.max_exp());
    const int db = b.max_exp();
    while (!a.is_zero() && a.max_exp() >= db) {
        const int shift = a.max_exp() - db;
        const Int la = a.coeff(a.max_exp());
        a = QLaurentPoly(lead) * a - QLaurentPoly::monomial(la, shift) * b;
    }
    return a;
}

}  // namespace

QLaurentPoly poly_gcd(const QLaurentPoly& a, const QLaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) {
        return QLaurentPoly();
    }
    const Int cont = boost::multiprecision::gcd(content(a), content(b));
    QLaurentPoly x = primitive_part(shift_to_zero(a));
    QLaurentPoly y = primitive_part(shift_to_zero(b));
    if (x.is_zero()) {
        std::swap(x, y);
    }
    while (!y.is_zero()) {
        if (x.max_exp() < y.max_exp()) {
            std::swap(x, y);
            continue;
        }
        QLaurentPoly r = primitive_part(shift_to_zero(pseudo_rem(x, y)));
        x = std::move(y);
        y = std::move(r);
    }
    QLaurentPoly g = QLaurentPoly(cont) * x;
    if (g.coeff(g.max_exp()) < 0) {
        g = -g;
    }
    return g;
}

namespace {

std::string render_term(const Int& c, int exp, bool first, bool latex) {
    std::string out;
    const bool neg = c < 0;
    if (neg) {
        out += '-';
    } else if (!first) {
        out += '+';
    }
    const Int mag = neg ? Int(-c) : c;
    if (mag != 1 || exp == 0) {
        out += mag.str();
    }
    if (exp != 0) {
        out += 'q';
        if (exp != 1) {
            if (latex) {
                out += "^{" + std::to_string(exp) + "}";
            } else {
                out += "^" + std::to_string(exp);
            }
        }
    }
    return out;
}

std::string render_poly(const QLaurentPoly& p, bool latex) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [exp, c] : p.terms()) {
        out += render_term(c, exp, first, latex);
        first = false;
    }
    return out;
}

}  // namespace

std::string QLaurentPoly::to_string() const { return render_poly(*this, false); }

std::string QLaurentPoly::to_latex() const { return render_poly(*this, true); }

}  // namespace qwhitney
