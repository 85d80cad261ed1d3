#pragma once

#include <optional>
#include <string>

#include "qwhitney/params.hpp"
#include "qwhitney/triangle.hpp"

namespace qwhitney {

/// Dense square matrix over a commutative ring entry type (QLaurentPoly or
/// Int). Finite leading principal submatrix of the corresponding infinite
/// lower-triangular matrix; lower-triangularity makes the truncation
/// consistent with the infinite matrix products.
template <typename T>
class SquareMatrix {
  public:
    explicit SquareMatrix(int dim) : dim_(dim) {
        if (dim <= 0) {
            throw DimensionError("matrix dimension must be positive, got " + std::to_string(dim));
        }
        cells_.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), T{});
    }

    static SquareMatrix identity(int dim) {
        SquareMatrix m(dim);
        for (int i = 0; i < dim; ++i) {
            m.at(i, i) = unit();
        }
        return m;
    }

    static SquareMatrix from_triangle(const Triangle<T>& t) {
        SquareMatrix m(t.rows());
        for (int n = 0; n < t.rows(); ++n) {
            for (int k = 0; k <= n; ++k) {
                m.at(n, k) = t.at(n, k);
            }
        }
        return m;
    }

    int dim() const { return dim_; }

    T& at(int i, int j) {
        check(i, j);
        return cells_[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) +
                      static_cast<std::size_t>(j)];
    }
    const T& at(int i, int j) const {
        check(i, j);
        return cells_[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) +
                      static_cast<std::size_t>(j)];
    }

    friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
        if (a.dim_ != b.dim_) {
            throw DimensionError("matrix product of dimensions " + std::to_string(a.dim_) +
                                 " and " + std::to_string(b.dim_));
        }
        SquareMatrix r(a.dim_);
        for (int i = 0; i < a.dim_; ++i) {
            for (int j = 0; j < a.dim_; ++j) {
                T acc{};
                for (int l = 0; l < a.dim_; ++l) {
                    acc += a.at(i, l) * b.at(l, j);
                }
                r.at(i, j) = std::move(acc);
            }
        }
        return r;
    }

    bool operator==(const SquareMatrix&) const = default;

  private:
    int dim_;
    std::vector<T> cells_;

    static T unit() {
        if constexpr (std::is_same_v<T, Int>) {
            return Int(1);
        } else {
            return T(Int(1));
        }
    }

    void check(int i, int j) const {
        if (i < 0 || j < 0 || i >= dim_ || j >= dim_) {
            throw IndexError("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                             ") outside dimension " + std::to_string(dim_));
        }
    }
};

/// The diagonal sign matrix D(n,k) = (-1)^n delta_{nk}; its own inverse.
template <typename T>
SquareMatrix<T> sign_matrix(int dim) {
    auto d = SquareMatrix<T>::identity(dim);
    for (int i = 1; i < dim; i += 2) {
        d.at(i, i) = -d.at(i, i);
    }
    return d;
}

/// Location and rendered values of the first entry where an identity fails.
struct Failure {
    int n = 0;
    int k = 0;
    std::string lhs;
    std::string rhs;
};

/// Outcome of an identity check: converts to bool, and keeps the first
/// counterexample for reporting.
struct CheckResult {
    bool ok = true;
    std::optional<Failure> first_failure;

    explicit operator bool() const { return ok; }

    static CheckResult pass() { return {}; }
    static CheckResult fail(int n, int k, std::string lhs, std::string rhs) {
        return {false, Failure{n, k, std::move(lhs), std::move(rhs)}};
    }
};

/// Checks W2 * W1 = W1 * W2 = I over the polynomial ring, where W1 and W2 are
/// the dim-row triangles of the two kinds for p.
CheckResult orthogonality_check(const ParameterSet& p, int dim);

/// Exact inverse of a unit lower-triangular matrix by forward substitution
/// over the entry ring. Throws NotUnitriangular when a diagonal entry is not 1.
template <typename T>
Triangle<T> invert_triangle(const Triangle<T>& t);

/// Which connection matrix to apply to a sequence.
enum class InverseDirection {
    FirstKind,   // g_n = sum_k w(n,k) f_k
    SecondKind,  // f_n = sum_k W(n,k) g_k
};

/// Applies the selected triangle to a finite sequence; the two directions are
/// mutually inverse transforms. Sequence length must not exceed p's capacity.
std::vector<QLaurentPoly> inverse_relation_apply(const ParameterSet& p,
                                                 const std::vector<QLaurentPoly>& f,
                                                 InverseDirection direction);

/// Parameter sets of the named classical reductions:
///   q_stirling_1, q_stirling_2      -> (m=1, alpha=0)
///   noncentral_q_stirling           -> (m=1, alpha=(r,...,r))
///   q_comtet                        -> (m=1, alpha_j = beta_j - j)
ParameterSet special_case_reduce(const std::string& name, int capacity, long long r = 0,
                                 const std::vector<long long>& beta = {});

// --- template definitions ---

template <typename T>
Triangle<T> invert_triangle(const Triangle<T>& t) {
    const T one = [] {
        if constexpr (std::is_same_v<T, Int>) {
            return Int(1);
        } else {
            return T(Int(1));
        }
    }();
    for (int i = 0; i < t.rows(); ++i) {
        if (t.at(i, i) != one) {
            throw NotUnitriangular("diagonal entry (" + std::to_string(i) + "," +
                                   std::to_string(i) + ") is not 1");
        }
    }
    Triangle<T> inv(t.rows());
    for (int i = 0; i < t.rows(); ++i) {
        inv.entry(i, i) = one;
        for (int j = i - 1; j >= 0; --j) {
            T acc{};
            for (int l = j; l < i; ++l) {
                acc += t.at(i, l) * inv.at(l, j);
            }
            inv.entry(i, j) = -acc;
        }
    }
    return inv;
}

}  // namespace qwhitney
