#include "qwhitney/whitney_second.hpp"

#include "qwhitney/qrational.hpp"
#include "qwhitney/xpoly.hpp"

namespace qwhitney::whitney_second {

namespace {

void require_rows(const ParameterSet& p, int rows) {
    if (rows < 0) {
        throw DomainError("negative row count " + std::to_string(rows));
    }
    if (rows > p.capacity()) {
        throw CapacityError("requested " + std::to_string(rows) + " rows but capacity is " +
                            std::to_string(p.capacity()));
    }
}

void require_distinct(const ParameterSet& p, int upto) {
    const auto [j, i] = p.first_duplicate(upto);
    if (j >= 0) {
        throw DuplicateNodes(j, i);
    }
}

}  // namespace

TriangleW2 build_by_recurrence(const ParameterSet& p, int rows) {
    require_rows(p, rows);
    TriangleW2 t(rows);
    if (rows == 0) {
        return t;
    }
    t.entry(0, 0) = QLaurentPoly(Int(1));
    for (int n = 0; n + 1 < rows; ++n) {
        for (int k = 0; k <= n + 1; ++k) {
            // [nu_k]_q multiplies the same-column entry; the k = n+1 diagonal
            // case only sees the shifted term.
            QLaurentPoly same;
            if (k <= n) {
                same = p.q_node(k) * t.at(n, k);
            }
            t.entry(n + 1, k) = t.at(n, k - 1) + same;
        }
    }
    return t;
}

TriangleW2 build_by_explicit_formula(const ParameterSet& p, int rows) {
    require_rows(p, rows);
    TriangleW2 t(rows);
    if (rows == 0) {
        return t;
    }
    require_distinct(p, rows - 1);
    t.entry(0, 0) = QLaurentPoly(Int(1));
    for (int k = 0; k < rows; ++k) {
        std::vector<QLaurentPoly> b;
        b.reserve(static_cast<std::size_t>(k) + 1);
        for (int j = 0; j <= k; ++j) {
            b.push_back(p.q_node(j));
        }
        // Bring the k+1 fractions over the common denominator
        // D = prod_{i<l<=k} (b_l - b_i); the cofactor of term j is
        // D / prod_{i!=j} |b_j - b_i| with sign (-1)^(k-j).
        QLaurentPoly common_den(Int(1));
        for (int l = 1; l <= k; ++l) {
            for (int i = 0; i < l; ++i) {
                common_den *= b[static_cast<std::size_t>(l)] - b[static_cast<std::size_t>(i)];
            }
        }
        std::vector<QLaurentPoly> cofactor;
        cofactor.reserve(static_cast<std::size_t>(k) + 1);
        for (int j = 0; j <= k; ++j) {
            QLaurentPoly own(Int(1));
            for (int i = 0; i < j; ++i) {
                own *= b[static_cast<std::size_t>(j)] - b[static_cast<std::size_t>(i)];
            }
            for (int l = j + 1; l <= k; ++l) {
                own *= b[static_cast<std::size_t>(l)] - b[static_cast<std::size_t>(j)];
            }
            auto cof = divide_exact(common_den, own);
            if (!cof) {
                throw NonPolynomialResult("cofactor division failed in explicit formula");
            }
            cofactor.push_back((k - j) % 2 == 0 ? *cof : -*cof);
        }
        std::vector<QLaurentPoly> powers;  // b_j^n, updated per n
        powers.reserve(b.size());
        for (int j = 0; j <= k; ++j) {
            powers.push_back(b[static_cast<std::size_t>(j)].pow(k));
        }
        for (int n = k; n < rows; ++n) {
            QLaurentPoly numerator;
            for (int j = 0; j <= k; ++j) {
                numerator += powers[static_cast<std::size_t>(j)] * cofactor[static_cast<std::size_t>(j)];
            }
            const QRationalFn value(numerator, common_den);
            if (!value.is_polynomial()) {
                throw NonPolynomialResult("explicit formula did not reduce to a polynomial at (" +
                                          std::to_string(n) + "," + std::to_string(k) + ")");
            }
            t.entry(n, k) = value.num();
            for (int j = 0; j <= k; ++j) {
                powers[static_cast<std::size_t>(j)] *= b[static_cast<std::size_t>(j)];
            }
        }
    }
    return t;
}

TriangleW2 build_by_complete_homogeneous(const ParameterSet& p, int rows) {
    require_rows(p, rows);
    TriangleW2 t(rows);
    if (rows == 0) {
        return t;
    }
    // h[d] = h_d over the nodes 0..k; adding node k updates in place via
    // h_k(d) = h_{k-1}(d) + [nu_k]_q h_k(d-1).
    std::vector<QLaurentPoly> h(static_cast<std::size_t>(rows), QLaurentPoly());
    h[0] = QLaurentPoly(Int(1));
    for (int k = 0; k < rows; ++k) {
        const QLaurentPoly b = p.q_node(k);
        for (int d = 1; d < rows - k; ++d) {
            h[static_cast<std::size_t>(d)] += b * h[static_cast<std::size_t>(d - 1)];
        }
        for (int n = k; n < rows; ++n) {
            t.entry(n, k) = h[static_cast<std::size_t>(n - k)];
        }
    }
    return t;
}

namespace {

// y = x / (1 - b t), truncated: y_n = x_n + b y_{n-1}.
std::vector<QLaurentPoly> geometric_divide(const std::vector<QLaurentPoly>& x,
                                           const QLaurentPoly& b) {
    std::vector<QLaurentPoly> y(x.size());
    for (std::size_t n = 0; n < x.size(); ++n) {
        y[n] = x[n];
        if (n > 0) {
            y[n] += b * y[n - 1];
        }
    }
    return y;
}

}  // namespace

SeriesT ogf_column(const ParameterSet& p, int k, int order) {
    if (k < 0) {
        throw DomainError("negative column " + std::to_string(k));
    }
    if (k >= p.capacity()) {
        throw CapacityError("column " + std::to_string(k) + " needs node " + std::to_string(k) +
                            " but capacity is " + std::to_string(p.capacity()));
    }
    if (order < k) {
        throw DomainError("truncation order " + std::to_string(order) + " below column " +
                          std::to_string(k));
    }
    std::vector<QLaurentPoly> y(static_cast<std::size_t>(order) + 1, QLaurentPoly());
    y[0] = QLaurentPoly(Int(1));
    y = geometric_divide(y, p.q_node(0));
    for (int j = 1; j <= k; ++j) {
        // Y_j = t/(1 - [nu_j]_q t) Y_{j-1}
        std::vector<QLaurentPoly> shifted(y.size(), QLaurentPoly());
        for (std::size_t n = y.size() - 1; n > 0; --n) {
            shifted[n] = y[n - 1];
        }
        y = geometric_divide(shifted, p.q_node(j));
    }
    return SeriesT{order, std::move(y)};
}

bool defining_expansion_check(const ParameterSet& p, int rows) {
    require_rows(p, rows);
    const TriangleW2 t = build_by_recurrence(p, rows);
    // basis[k] = prod_{j<k} (X - [nu_j]_q); laurent_basis[k] carries the extra
    // unit q^(-sum_{i<k} nu_i) so that it expands the plain q-falling product
    // over the nodes, and the matching inverse scalar multiplies the entry.
    std::vector<XPoly> basis;
    std::vector<XPoly> laurent_basis;
    std::vector<QLaurentPoly> entry_scalar;
    XPoly product = XPoly::constant(QLaurentPoly(Int(1)));
    long long node_sum = 0;
    for (int k = 0; k < rows; ++k) {
        basis.push_back(product);
        laurent_basis.push_back(
            product.scale(QLaurentPoly::monomial(Int(1), static_cast<int>(-node_sum))));
        entry_scalar.push_back(QLaurentPoly::monomial(Int(1), static_cast<int>(node_sum)));
        if (k + 1 < rows) {
            product *= XPoly::x() - XPoly::constant(p.q_node(k));
            node_sum += p.node(k);
        }
    }
    for (int n = 0; n < rows; ++n) {
        XPoly plain;
        XPoly laurent;
        for (int k = 0; k <= n; ++k) {
            plain += basis[static_cast<std::size_t>(k)].scale(t.at(n, k));
            laurent += laurent_basis[static_cast<std::size_t>(k)].scale(
                entry_scalar[static_cast<std::size_t>(k)] * t.at(n, k));
        }
        const XPoly xn = XPoly::monomial(QLaurentPoly(Int(1)), n);
        if (plain != xn || laurent != xn) {
            return false;
        }
    }
    return true;
}

bool vertical_recurrence_check(const ParameterSet& p, const TriangleW2& t) {
    if (t.rows() == 0) {
        return true;
    }
    // Column 0 closed form [alpha_0]_q^n.
    const QLaurentPoly b0 = p.q_node(0);
    QLaurentPoly col0(Int(1));
    for (int n = 0; n < t.rows(); ++n) {
        if (t.at(n, 0) != col0) {
            return false;
        }
        col0 *= b0;
    }
    for (int n = 1; n < t.rows(); ++n) {
        for (int k = 1; k <= n; ++k) {
            const QLaurentPoly bk = p.q_node(k);
            QLaurentPoly sum;
            QLaurentPoly power(Int(1));  // bk^(n-j), built from j = n downward
            for (int j = n; j >= k; --j) {
                sum += t.at(j - 1, k - 1) * power;
                power *= bk;
            }
            if (sum != t.at(n, k)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace qwhitney::whitney_second
