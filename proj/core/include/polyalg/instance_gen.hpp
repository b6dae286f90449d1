#pragma once

#include "polyalg/algebra.hpp"
#include "polyalg/compact_set.hpp"
#include "polyalg/power_sum.hpp"
#include "polyalg/rng.hpp"
#include "polyalg/tensor_element.hpp"

namespace polyalg {

/// Seeded random instances for the property suites. All draws are functions
/// of the Rng stream only.
namespace gen {

/// p in {1, 2, 3, inf} or the sup norm.
NormSpec random_simple_norm(Rng& rng);

SpacePtr random_space(Rng& rng, int max_dim);

/// Pointwise algebra with a random simple norm.
AlgebraPtr random_pointwise_algebra(Rng& rng, int max_dim);

/// Pointwise or Lourenco (over a sup/2-norm base).
AlgebraPtr random_algebra(Rng& rng, int max_dim);

/// Norm pairs for which operator_norm has a closed form, so nuclear-type
/// upper bounds are true upper bounds: scalar target, sup target, 2 -> 2,
/// or source p = 1.
std::pair<SpacePtr, AlgebraPtr> random_exact_norm_pair(Rng& rng, int max_dim_e, int max_dim_a);

PowerSumRep random_power_sum(Rng& rng, int degree, int terms, SpacePtr space, AlgebraPtr algebra);

/// Mixed-degree sum with parts of degree 0..max_degree (each present with
/// probability 1/2, at least one part).
PolynomialSum random_polynomial(Rng& rng, int max_degree, int max_terms, SpacePtr space,
                                AlgebraPtr algebra);

/// Point with norm <= radius (uniform direction, uniform radius factor).
CVec random_point(Rng& rng, const FiniteSpace& space, double radius);

CompactSet random_compact(Rng& rng, SpacePtr space, int n_points, double radius);

TensorElement random_tensor_element(Rng& rng, int pairs, int max_degree, SpacePtr space,
                                    AlgebraPtr algebra);

/// The 64-point unit circle in C (sup norm), used by the hull checks.
CompactSet unit_circle(int n_points = 64);

}  // namespace gen
}  // namespace polyalg
