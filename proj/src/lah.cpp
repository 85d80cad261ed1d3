#include "qwhitney/lah.hpp"

#include "qwhitney/identities.hpp"

namespace qwhitney::lah {

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

Int binomial(int n, int k) {
    if (k < 0 || k > n) {
        return Int(0);
    }
    Int r(1);
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

Int factorial(int n) {
    Int r(1);
    for (int i = 2; i <= n; ++i) {
        r *= i;
    }
    return r;
}

}  // namespace

IntTriangle alpha_whitney_first(const ParameterSet& p, int rows) {
    require_rows(p, rows);
    IntTriangle t(rows);
    if (rows == 0) {
        return t;
    }
    t.entry(0, 0) = 1;
    for (int n = 0; n + 1 < rows; ++n) {
        const Int nu(p.node(n));
        for (int k = 0; k <= n + 1; ++k) {
            t.entry(n + 1, k) = t.at(n, k - 1) - nu * t.at(n, k);
        }
    }
    return t;
}

IntTriangle alpha_whitney_second(const ParameterSet& p, int rows) {
    require_rows(p, rows);
    IntTriangle t(rows);
    if (rows == 0) {
        return t;
    }
    t.entry(0, 0) = 1;
    for (int n = 0; n + 1 < rows; ++n) {
        for (int k = 0; k <= n + 1; ++k) {
            Int same;
            if (k <= n) {
                same = Int(p.node(k)) * t.at(n, k);
            }
            t.entry(n + 1, k) = t.at(n, k - 1) + same;
        }
    }
    return t;
}

TriangleLah build_from_definition(const ParameterSet& p, int rows) {
    require_rows(p, rows);
    const IntTriangle w = alpha_whitney_first(p, rows);
    const IntTriangle W = alpha_whitney_second(p, rows);
    TriangleLah t(rows);
    for (int n = 0; n < rows; ++n) {
        for (int k = 0; k <= n; ++k) {
            Int acc;
            for (int j = k; j <= n; ++j) {
                const Int term = w.at(n, j) * W.at(j, k);
                acc += (n - j) % 2 == 0 ? term : -term;
            }
            t.entry(n, k) = std::move(acc);
        }
    }
    return t;
}

TriangleLah build_by_recurrence(const ParameterSet& p, int rows) {
    require_rows(p, rows);
    TriangleLah t(rows);
    if (rows == 0) {
        return t;
    }
    t.entry(0, 0) = 1;
    for (int n = 0; n + 1 < rows; ++n) {
        const long long nu_n = p.node(n);
        for (int k = 0; k <= n + 1; ++k) {
            Int same;
            if (k <= n) {
                same = Int(p.node(k) + nu_n) * t.at(n, k);
            }
            t.entry(n + 1, k) = t.at(n, k - 1) + same;
        }
    }
    return t;
}

TriangleLah build_by_explicit(const ParameterSet& p, int rows) {
    require_rows(p, rows);
    TriangleLah t(rows);
    if (rows == 0) {
        return t;
    }
    const auto [dj, di] = p.first_duplicate(rows - 1);
    if (dj >= 0) {
        throw DuplicateNodes(dj, di);
    }
    t.entry(0, 0) = 1;
    for (int n = 1; n < rows; ++n) {
        for (int k = 0; k <= n; ++k) {
            Rat acc;
            for (int j = 0; j <= k; ++j) {
                Int num(1);
                for (int i = 0; i < n; ++i) {
                    num *= Int(p.node(j) + p.node(i));
                }
                Int den(1);
                for (int i = 0; i <= k; ++i) {
                    if (i != j) {
                        den *= Int(p.node(j) - p.node(i));
                    }
                }
                if (den < 0) {  // cpp_rational requires a positive denominator
                    num = -num;
                    den = -den;
                }
                acc += Rat(num, den);
            }
            if (boost::multiprecision::denominator(acc) != 1) {
                throw NonIntegerResult("explicit Lah formula did not reduce to an integer at (" +
                                       std::to_string(n) + "," + std::to_string(k) + ")");
            }
            t.entry(n, k) = boost::multiprecision::numerator(acc);
        }
    }
    return t;
}

bool vertical_recurrence_check(const ParameterSet& p, const TriangleLah& t) {
    if (t.rows() == 0) {
        return true;
    }
    Int col0(1);
    for (int n = 0; n < t.rows(); ++n) {
        if (t.at(n, 0) != col0) {
            return false;
        }
        if (n < t.rows() - 1) {
            col0 *= Int(p.node(0) + p.node(n));
        }
    }
    for (int n = 1; n < t.rows(); ++n) {
        for (int k = 1; k <= n; ++k) {
            Int sum;
            Int suffix(1);  // prod_{i=j}^{n-1} (nu_i + nu_k), built downward from j = n
            for (int j = n; j >= k; --j) {
                sum += t.at(j - 1, k - 1) * suffix;
                if (j > k) {
                    suffix *= Int(p.node(j - 1) + p.node(k));
                }
            }
            if (sum != t.at(n, k)) {
                return false;
            }
        }
    }
    return true;
}

bool connection_identity_check(const ParameterSet& p, int rows) {
    require_rows(p, rows);
    const TriangleLah t = build_by_recurrence(p, rows);
    // Integer polynomials in X as plain coefficient vectors, index = power.
    using IntPoly = std::vector<Int>;
    const auto mul_linear = [](const IntPoly& a, const Int& c) {
        // a(X) * (X + c)
        IntPoly r(a.size() + 1, Int(0));
        for (std::size_t i = 0; i < a.size(); ++i) {
            r[i + 1] += a[i];
            r[i] += c * a[i];
        }
        return r;
    };
    std::vector<IntPoly> basis;  // basis[k](X) = prod_{j<k} (X - nu_j)
    IntPoly basis_prod{Int(1)};
    IntPoly lhs{Int(1)};  // prod_{i<n} (X + nu_i)
    for (int n = 0; n < rows; ++n) {
        basis.push_back(basis_prod);
        IntPoly rhs(static_cast<std::size_t>(n) + 1, Int(0));
        for (int k = 0; k <= n; ++k) {
            const Int& c = t.at(n, k);
            for (std::size_t i = 0; i < basis[static_cast<std::size_t>(k)].size(); ++i) {
                rhs[i] += c * basis[static_cast<std::size_t>(k)][i];
            }
        }
        if (rhs != lhs) {
            return false;
        }
        if (n + 1 < rows) {
            basis_prod = mul_linear(basis_prod, Int(-p.node(n)));
            lhs = mul_linear(lhs, Int(p.node(n)));
        }
    }
    return true;
}

Int r_whitney_lah_explicit(long long m, long long r, int n, int k) {
    if (m < 1) {
        throw DomainError("r-Whitney-Lah explicit formula requires m >= 1, got " +
                          std::to_string(m));
    }
    if (n < 0 || k < 0 || k > n) {
        throw DomainError("r-Whitney-Lah indices require n >= k >= 0");
    }
    Int sum;
    for (int j = 0; j <= k; ++j) {
        Int prod(1);
        for (int i = 0; i < n; ++i) {
            prod *= Int(2 * r + j * m + static_cast<long long>(i) * m);
        }
        const Int term = binomial(k, j) * prod;
        sum += (k - j) % 2 == 0 ? term : -term;
    }
    Int denom = factorial(k);
    for (int i = 0; i < k; ++i) {
        denom *= m;
    }
    const Rat value(sum, denom);
    if (boost::multiprecision::denominator(value) != 1) {
        throw NonIntegerResult("r-Whitney-Lah explicit formula is not integral at (" +
                               std::to_string(n) + "," + std::to_string(k) + ")");
    }
    return boost::multiprecision::numerator(value);
}

Int cheon_jung_closed_form(long long m, long long r, int n, int k) {
    if (k < 0 || k > n) {
        return Int(0);
    }
    Int prod(1);
    for (int i = 0; i < n - k; ++i) {
        prod *= Int(2 * r + k * m + static_cast<long long>(i) * m);
    }
    return binomial(n, k) * prod;
}

bool cheon_jung_identity_check(long long m, long long r, int n_max) {
    if (m < 1) {
        throw DomainError("Cheon-Jung sweep requires m >= 1");
    }
    const ParameterSet p(m, Preset::constant(r), n_max + 1, Mode::IntegerMode);
    const TriangleLah t = build_by_recurrence(p, n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        for (int k = 0; k <= n; ++k) {
            const Int closed = cheon_jung_closed_form(m, r, n, k);
            if (r_whitney_lah_explicit(m, r, n, k) != closed || t.at(n, k) != closed) {
                return false;
            }
        }
    }
    return true;
}

bool matrix_identities_check(const ParameterSet& p, int dim) {
    const auto w = SquareMatrix<Int>::from_triangle(alpha_whitney_first(p, dim));
    const auto W = SquareMatrix<Int>::from_triangle(alpha_whitney_second(p, dim));
    const auto d = sign_matrix<Int>(dim);
    const TriangleLah lah_t = build_by_recurrence(p, dim);
    const auto L = SquareMatrix<Int>::from_triangle(lah_t);
    if (d * w * d * W != L) {
        return false;
    }
    const auto L_inv = SquareMatrix<Int>::from_triangle(invert_triangle(lah_t));
    return L_inv == d * L * d;
}

SpecialCaseTable special_case_tables(const std::string& name, int rows, long long m, long long r) {
    if (name == "lah") {
        ParameterSet p(1, Preset::zero(), rows, Mode::IntegerMode);
        TriangleLah ref(rows);
        for (int n = 0; n < rows; ++n) {
            for (int k = 0; k <= n; ++k) {
                if (n == 0 && k == 0) {
                    ref.entry(0, 0) = 1;
                } else {
                    // signless Lah (n!/k!) C(n-1,k-1); zero for k = 0, n >= 1
                    ref.entry(n, k) = factorial(n) / factorial(k) * binomial(n - 1, k - 1);
                }
            }
        }
        return {name, std::move(p), std::move(ref)};
    }
    if (name == "r_lah" || name == "r_whitney_lah") {
        const long long mm = name == "r_lah" ? 1 : m;
        ParameterSet p(mm, Preset::constant(r), rows, Mode::IntegerMode);
        TriangleLah ref(rows);
        for (int n = 0; n < rows; ++n) {
            for (int k = 0; k <= n; ++k) {
                ref.entry(n, k) = cheon_jung_closed_form(mm, r, n, k);
            }
        }
        return {name, std::move(p), std::move(ref)};
    }
    throw UnknownPreset("unknown special case table '" + name + "'");
}

}  // namespace qwhitney::lah
