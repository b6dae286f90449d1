#pragma once

#include <functional>

#include "polyalg/budget.hpp"
#include "polyalg/compact_set.hpp"
#include "polyalg/power_sum.hpp"
#include "polyalg/symmetric_form.hpp"
#include "polyalg/tensor_element.hpp"

namespace polyalg {

/// Exact max of ||f(x)||_A over the finite point list of K.
double uniform_norm_on_K(const std::function<CVec(const CVec&)>& f, const CompactSet& K,
                         const FiniteBanachAlgebra& target);
double uniform_norm_on_K(const PowerSumRep& p, const CompactSet& K);
double uniform_norm_on_K(const PolynomialSum& p, const CompactSet& K);
double uniform_norm_on_K(const TensorElement& t, const CompactSet& K);

/// Certified lower bound for sup{||P(x)|| : ||x|| <= 1} with a witness on the
/// unit sphere (homogeneity puts the sup there for n >= 1). Extra starts are
/// refined alongside the seeded candidates.
NormEstimate sup_norm_unit_ball(const PowerSumRep& p, const SearchBudget& budget,
                                const std::vector<CVec>& extra_starts = {});

/// Norm of the multilinear form: sup over n-tuples of unit vectors,
/// estimated by the same sampling scheme on the product of spheres.
/// The witness stacks the n tuple entries.
NormEstimate sup_norm_unit_ball(const SymmetricForm& form, const SearchBudget& budget,
                                const std::vector<CVec>& extra_starts = {});

/// sum_i |w_i| ||T_i||^n for the given representation: an upper bound for the
/// nuclear-type norm. Operator norms use closed forms where the norm pair
/// admits one and a default-budget search otherwise.
double nuclear_norm_upper(const PowerSumRep& p);

/// Certified lower bound of sup{||T x||_A : ||x||_E <= 1}. Closed-form fast
/// paths: functional targets, source p = 1, sup targets, and 2 -> 2 (SVD).
NormEstimate operator_norm(const LinearOperator& op, const SearchBudget& budget);

/// True when the chosen norm pair has an exact closed form in operator_norm.
bool operator_norm_is_exact(const NormSpec& source, const NormSpec& target);

struct GrowthBoundReport {
    double lhs = 0.0;  // ||P||_K
    double rhs = 0.0;  // radius^n * nuclear upper bound
    bool satisfied = false;
};

/// Checks ||P||_K <= M^n (nuclear upper bound) with M = K.radius().
GrowthBoundReport check_growth_bound(const PowerSumRep& p, const CompactSet& K);

/// Injective tensor norm of sum f_i (x) a_i over K: sup over x in K and the
/// A-dual unit ball of |sum f_i(x) phi(a_i)|, evaluated pointwise through
/// dual_norm_sup. Witness is the (point, functional) pair.
NormEstimate injective_tensor_norm(const TensorElement& t, const CompactSet& K,
                                   const SearchBudget& budget);

}  // namespace polyalg
