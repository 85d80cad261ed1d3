#pragma once

#include "qwhitney/params.hpp"
#include "qwhitney/triangle.hpp"

namespace qwhitney::whitney_first {

/// Triangle of (q,alpha)-Whitney numbers of the first kind w(n,k), built by
/// the two-term recurrence
///   w(n+1,k) = w(n,k-1) - [nu_n]_q w(n,k),   w(0,0) = 1,
/// whose column 0 collapses to (-1)^n prod_{i<n} [nu_i]_q.
TriangleW1 build_by_recurrence(const ParameterSet& p, int rows);

/// Same triangle via w(n,k) = (-1)^(n-k) sigma_{n-k}([nu_0]_q,...,[nu_{n-1}]_q),
/// with the elementary symmetric functions read off the incremental product
/// expansion of prod_j (1 + [nu_j]_q Y).
TriangleW1 build_by_elementary_symmetric(const ParameterSet& p, int rows);

/// Same triangle via the vertical recurrence
///   w(n,k) = sum_{j=k}^{n} (-1)^(n-j) w(j-1,k-1) prod_{i=j}^{n-1} [nu_i]_q,
/// seeded by w(0,0) = 1; column 0 is taken from its closed product form.
TriangleW1 build_by_vertical_recurrence(const ParameterSet& p, int rows);

/// Expands prod_{j<n} (X - [nu_j]_q) independently as an XPoly and compares
/// its coefficient sequence against row n of the triangle, for every n < rows.
bool defining_identity_check(const ParameterSet& p, int rows);

/// Row n of the triangle scaled by q^(-sum_{i<n} nu_i): the coefficients of
/// the n-th q-falling product over the nodes, expanded in powers of [x]_q.
std::vector<QLaurentPoly> laurent_form_row(const ParameterSet& p, int row);

}  // namespace qwhitney::whitney_first
