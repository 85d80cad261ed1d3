#pragma once

#include <string>

#include "qwhitney/params.hpp"
#include "qwhitney/triangle.hpp"

namespace qwhitney::lah {

/// Integer alpha-Whitney triangle of the first kind (the q -> 1 limit),
/// built over plain integers by w(n+1,k) = w(n,k-1) - nu_n w(n,k). Unlike the
/// q-builders this accepts negative nodes, so integer-mode parameter sets are
/// fully supported.
IntTriangle alpha_whitney_first(const ParameterSet& p, int rows);

/// Integer alpha-Whitney triangle of the second kind:
/// W(n+1,k) = W(n,k-1) + nu_k W(n,k).
IntTriangle alpha_whitney_second(const ParameterSet& p, int rows);

/// alpha-Whitney-Lah triangle from the defining signed product of the two
/// integer triangles: L(n,k) = sum_{j=k}^{n} (-1)^(n-j) w(n,j) W(j,k).
TriangleLah build_from_definition(const ParameterSet& p, int rows);

/// Same triangle by the recurrence
///   L(n+1,k) = L(n,k-1) + (nu_k + nu_n) L(n,k),
/// with column 0 the product prod_{i<n} (nu_0 + nu_i).
TriangleLah build_by_recurrence(const ParameterSet& p, int rows);

/// Same triangle by the explicit formula
///   L(n,k) = sum_{j=0}^{k} prod_{i<n} (nu_j + nu_i) / prod_{i<=k, i!=j} (nu_j - nu_i),
/// in exact rational arithmetic with a final integrality assertion.
/// Requires pairwise-distinct nodes.
TriangleLah build_by_explicit(const ParameterSet& p, int rows);

/// Checks L(n,k) = sum_{j=k}^{n} L(j-1,k-1) prod_{i=j}^{n-1} (nu_i + nu_k)
/// for k >= 1 on a built triangle, plus the column-0 product form.
bool vertical_recurrence_check(const ParameterSet& p, const TriangleLah& t);

/// Verifies prod_{i<n} (X + nu_i) = sum_k L(n,k) prod_{j<k} (X - nu_j) by
/// expanding both sides as integer-coefficient polynomials, for all n < rows.
bool connection_identity_check(const ParameterSet& p, int rows);

/// r-Whitney-Lah number by the alternating-binomial formula
///   L_{m,r}(n,k) = (1/(m^k k!)) sum_{j=0}^{k} C(k,j) (-1)^(k-j) prod_{i<n} (2r + jm + im).
/// Requires m >= 1 (the formula divides by m^k); exact rational intermediate,
/// integer result.
Int r_whitney_lah_explicit(long long m, long long r, int n, int k);

/// Product closed form L_{m,r}(n,k) = C(n,k) prod_{i=0}^{n-k-1} (2r + km + im).
Int cheon_jung_closed_form(long long m, long long r, int n, int k);

/// Sweeps 0 <= k <= n <= n_max checking the alternating-binomial formula, the
/// product closed form, and the constant-alpha triangle against each other.
bool cheon_jung_identity_check(long long m, long long r, int n_max);

/// Checks the matrix identities L = D w D W and L^{-1} = D L D on the
/// dim-dimensional integer matrices for p.
bool matrix_identities_check(const ParameterSet& p, int dim);

/// Named special case: parameter mapping plus an independently computed
/// reference triangle.
struct SpecialCaseTable {
    std::string name;
    ParameterSet params;
    TriangleLah reference;
};

/// Reference tables for the named reductions:
///   "lah"            -> (m=1, alpha=0), reference (n!/k!) C(n-1,k-1)
///   "r_lah"          -> (m=1, alpha=(r,...,r)), product closed form
///   "r_whitney_lah"  -> (m, alpha=(r,...,r)), product closed form
SpecialCaseTable special_case_tables(const std::string& name, int rows, long long m = 1,
                                     long long r = 0);

}  // namespace qwhitney::lah
