#pragma once

#include "polyalg/power_sum.hpp"

namespace polyalg {

/// Product of homogeneous power sums of degrees m, n >= 1 as a degree-(m+n)
/// power sum. Every term pair (S_i, T_j) expands into the 2^(m+n) weighted
/// powers
///   U_eps = (eps_1 + ... + eps_m) S_i + (eps_{m+1} + ... + eps_{m+n}) T_j,
///   weight = w_i w_j eps_1...eps_{m+n} / (2^(m+n) (m+n)!),
/// so the term count is exactly |P| |Q| 2^(m+n). Degree-0 inputs route to
/// multiply_by_constant.
PowerSumRep product_power_sums(const PowerSumRep& p, const PowerSumRep& q);

/// P(x) b as a degree-m power sum. For m >= 2 the constant is decomposed as
/// b = b_1^m + ... + b_m^m with
///   b_k = e^(2 pi k i / m^2) / m^(2/m) (b + e^(2 pi k i / m) 1),
/// and each operator is post-multiplied by b_k. For m = 1 the decomposition
/// identity fails (the sum evaluates to b + 1), so the operators are
/// post-multiplied by b directly.
PowerSumRep multiply_by_constant(const PowerSumRep& p, const CVec& b);

/// The b_k of the decomposition above (m >= 2); sum of m-th powers equals b.
std::vector<CVec> roots_of_unity_decomposition(const FiniteBanachAlgebra& algebra, const CVec& b,
                                               int m);

/// Merges terms with proportional operators; evaluation is unchanged.
/// Separate utility: products never simplify on their own.
PowerSumRep coalesce_terms(const PowerSumRep& p, double rel_tol = 1e-12);

}  // namespace polyalg
