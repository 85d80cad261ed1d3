#pragma once

#include <vector>

#include "qwhitney/qlaurent.hpp"

namespace qwhitney {

/// Lower-triangular array with rows 0..n_rows-1; row n holds entries
/// (n,0)..(n,n). Entries above the diagonal are not materialized; at() reads
/// them as zero.
template <typename T>
class Triangle {
  public:
    Triangle() = default;

    explicit Triangle(int n_rows) {
        rows_.resize(static_cast<std::size_t>(n_rows));
        for (int n = 0; n < n_rows; ++n) {
            rows_[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, T{});
        }
    }

    int rows() const { return static_cast<int>(rows_.size()); }

    const T& at(int n, int k) const {
        check_row(n);
        if (k < 0 || k > n) {
            static const T zero{};
            return zero;
        }
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }

    T& entry(int n, int k) {
        check_row(n);
        if (k < 0 || k > n) {
            throw IndexError("triangle entry (" + std::to_string(n) + "," + std::to_string(k) +
                             ") outside the lower triangle");
        }
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }

    const std::vector<T>& row(int n) const {
        check_row(n);
        return rows_[static_cast<std::size_t>(n)];
    }

    bool operator==(const Triangle&) const = default;

  private:
    std::vector<std::vector<T>> rows_;

    void check_row(int n) const {
        if (n < 0 || n >= rows()) {
            throw IndexError("triangle row " + std::to_string(n) + " outside 0.." +
                             std::to_string(rows() - 1));
        }
    }
};

using TriangleW1 = Triangle<QLaurentPoly>;
using TriangleW2 = Triangle<QLaurentPoly>;
using TriangleLah = Triangle<Int>;
using IntTriangle = Triangle<Int>;

/// Entrywise evaluation at q = 1.
inline IntTriangle q1_limit(const Triangle<QLaurentPoly>& t) {
    IntTriangle out(t.rows());
    for (int n = 0; n < t.rows(); ++n) {
        for (int k = 0; k <= n; ++k) {
            out.entry(n, k) = t.at(n, k).eval_at_q1();
        }
    }
    return out;
}

}  // namespace qwhitney
