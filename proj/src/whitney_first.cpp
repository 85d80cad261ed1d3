#include "qwhitney/whitney_first.hpp"

#include "qwhitney/xpoly.hpp"

namespace qwhitney::whitney_first {

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

std::vector<QLaurentPoly> node_brackets(const ParameterSet& p, int count) {
    std::vector<QLaurentPoly> b;
    b.reserve(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j) {
        b.push_back(p.q_node(j));
    }
    return b;
}

}  // namespace

TriangleW1 build_by_recurrence(const ParameterSet& p, int rows) {
    require_rows(p, rows);
    TriangleW1 t(rows);
    if (rows == 0) {
        return t;
    }
    t.entry(0, 0) = QLaurentPoly(Int(1));
    for (int n = 0; n + 1 < rows; ++n) {
        const QLaurentPoly b = p.q_node(n);
        for (int k = 0; k <= n + 1; ++k) {
            t.entry(n + 1, k) = t.at(n, k - 1) - b * t.at(n, k);
        }
    }
    return t;
}

TriangleW1 build_by_elementary_symmetric(const ParameterSet& p, int rows) {
    require_rows(p, rows);
    TriangleW1 t(rows);
    // sigma[i] = sigma_i over the nodes seen so far, maintained by expanding
    // one factor (1 + [nu_n]_q Y) at a time.
    std::vector<QLaurentPoly> sigma{QLaurentPoly(Int(1))};
    for (int n = 0; n < rows; ++n) {
        for (int k = 0; k <= n; ++k) {
            const QLaurentPoly& s = sigma[static_cast<std::size_t>(n - k)];
            t.entry(n, k) = ((n - k) % 2 == 0) ? s : -s;
        }
        if (n + 1 < rows) {
            const QLaurentPoly b = p.q_node(n);
            sigma.push_back(QLaurentPoly());
            for (std::size_t i = sigma.size() - 1; i > 0; --i) {
                sigma[i] += b * sigma[i - 1];
            }
        }
    }
    return t;
}

TriangleW1 build_by_vertical_recurrence(const ParameterSet& p, int rows) {
    require_rows(p, rows);
    TriangleW1 t(rows);
    if (rows == 0) {
        return t;
    }
    const auto b = node_brackets(p, rows - 1);
    t.entry(0, 0) = QLaurentPoly(Int(1));
    // Column 0 from its closed form w(n,0) = (-1)^n prod_{i<n} [nu_i]_q.
    QLaurentPoly col0(Int(1));
    for (int n = 1; n < rows; ++n) {
        col0 = -b[static_cast<std::size_t>(n - 1)] * col0;
        t.entry(n, 0) = col0;
    }
    for (int n = 1; n < rows; ++n) {
        for (int k = 1; k <= n; ++k) {
            QLaurentPoly sum;
            QLaurentPoly suffix(Int(1));  // prod_{i=j}^{n-1} [nu_i]_q, built downward
            for (int j = n; j >= k; --j) {
                const QLaurentPoly term = t.at(j - 1, k - 1) * suffix;
                sum = ((n - j) % 2 == 0) ? sum + term : sum - term;
                if (j > k) {
                    suffix *= b[static_cast<std::size_t>(j - 1)];
                }
            }
            t.entry(n, k) = sum;
        }
    }
    return t;
}

bool defining_identity_check(const ParameterSet& p, int rows) {
    require_rows(p, rows);
    const TriangleW1 t = build_by_recurrence(p, rows);
    XPoly product = XPoly::constant(QLaurentPoly(Int(1)));
    for (int n = 0; n < rows; ++n) {
        if (product.degree() != n) {
            return false;
        }
        for (int k = 0; k <= n; ++k) {
            if (product.coeff(k) != t.at(n, k)) {
                return false;
            }
        }
        if (n + 1 < rows) {
            product *= XPoly::x() - XPoly::constant(p.q_node(n));
        }
    }
    return true;
}

std::vector<QLaurentPoly> laurent_form_row(const ParameterSet& p, int row) {
    require_rows(p, row);
    // Roll the recurrence forward one row at a time; row `row` needs nodes 0..row-1.
    std::vector<QLaurentPoly> cur{QLaurentPoly(Int(1))};
    long long shift = 0;
    for (int n = 0; n < row; ++n) {
        const QLaurentPoly b = p.q_node(n);
        shift += p.node(n);
        std::vector<QLaurentPoly> next(cur.size() + 1);
        for (int k = 0; k < static_cast<int>(next.size()); ++k) {
            const QLaurentPoly lower = k > 0 ? cur[static_cast<std::size_t>(k - 1)] : QLaurentPoly();
            const QLaurentPoly same =
                k < static_cast<int>(cur.size()) ? cur[static_cast<std::size_t>(k)] : QLaurentPoly();
            next[static_cast<std::size_t>(k)] = lower - b * same;
        }
        cur = std::move(next);
    }
    const QLaurentPoly unit = QLaurentPoly::monomial(Int(1), static_cast<int>(-shift));
    for (auto& c : cur) {
        c = c * unit;
    }
    return cur;
}

}  // namespace qwhitney::whitney_first
