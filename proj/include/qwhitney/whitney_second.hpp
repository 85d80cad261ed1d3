#pragma once

#include "qwhitney/params.hpp"
#include "qwhitney/triangle.hpp"

namespace qwhitney::whitney_second {

/// Truncated formal power series in t with Laurent-polynomial coefficients;
/// coeffs[n] is the coefficient of t^n, n <= order. Series are treated purely
/// formally: no convergence condition is attached to any generating function.
struct SeriesT {
    int order = 0;
    std::vector<QLaurentPoly> coeffs;

    bool operator==(const SeriesT&) const = default;
};

/// Triangle of (q,alpha)-Whitney numbers of the second kind W(n,k) by the
/// recurrence W(n+1,k) = W(n,k-1) + [nu_k]_q W(n,k), W(0,0) = 1, which gives
/// column 0 the closed form [alpha_0]_q^n.
TriangleW2 build_by_recurrence(const ParameterSet& p, int rows);

/// Same triangle by the explicit formula
///   W(n,k) = sum_{j=0}^{k} [nu_j]_q^n / prod_{i<=k, i!=j} ([nu_j]_q - [nu_i]_q),
/// evaluated over the rational-function field with a final reduction that must
/// leave denominator 1. Requires pairwise-distinct nodes; equal nodes raise
/// DuplicateNodes (no confluent form is defined).
TriangleW2 build_by_explicit_formula(const ParameterSet& p, int rows);

/// Same triangle as the complete homogeneous symmetric functions
/// W(n,k) = h_{n-k}([nu_0]_q, ..., [nu_k]_q), by dynamic programming over the
/// product of geometric series.
TriangleW2 build_by_complete_homogeneous(const ParameterSet& p, int rows);

/// Column generating function t^k prod_{j=0}^{k} (1 - [nu_j]_q t)^{-1},
/// truncated at `order` (>= k), computed by iterating
/// Y_k = t/(1 - [nu_k]_q t) Y_{k-1} from Y_0 = (1 - [nu_0]_q t)^{-1}.
/// The coefficient of t^n is W(n,k).
SeriesT ogf_column(const ParameterSet& p, int k, int order);

/// Verifies X^n = sum_k W(n,k) prod_{j<k} (X - [nu_j]_q) for all n < rows,
/// and the equivalent Laurent form obtained by attaching the column scalars
/// q^(+-sum_{i<k} nu_i) to the entries and to the basis products.
bool defining_expansion_check(const ParameterSet& p, int rows);

/// Checks the vertical recurrence
///   W(n,k) = sum_{j=k}^{n} W(j-1,k-1) [nu_k]_q^(n-j)   (k >= 1)
/// on an already-built triangle, together with the column-0 closed form.
bool vertical_recurrence_check(const ParameterSet& p, const TriangleW2& t);

}  // namespace qwhitney::whitney_second
