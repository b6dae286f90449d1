#pragma once

#include <optional>
#include <vector>

#include "polyalg/budget.hpp"
#include "polyalg/compact_set.hpp"
#include "polyalg/power_sum.hpp"

namespace polyalg {

struct ApproxPair {
    PolynomialSum f;  // scalar polynomial on E (nuclear by construction)
    CVec a;           // vector in E
};

/// Finite-rank approximation of the identity on K: pairs (f_i, a_i) with
/// epsilon = exact max over K of ||x - sum f_i(x) a_i||, recomputed on
/// construction.
class IdentityApproximation {
public:
    IdentityApproximation(std::vector<ApproxPair> pairs, const CompactSet& K, SpacePtr space);

    const std::vector<ApproxPair>& pairs() const { return pairs_; }
    double epsilon() const { return epsilon_; }
    const SpacePtr& space() const { return space_; }

    /// sum f_i(x) a_i.
    CVec combine(const CVec& x) const;

private:
    std::vector<ApproxPair> pairs_;
    SpacePtr space_;
    double epsilon_;
};

/// Full rank (no cap): the coordinate decomposition, epsilon = 0 exactly.
/// With rank_cap r < dim: the best orthogonal rank-r projection found by SVD
/// initialization plus seeded minimax refinement of the residual on K; the
/// reported epsilon is always the exact residual of the returned pairs.
IdentityApproximation finite_rank_identity_approx(const FiniteSpace& space, const CompactSet& K,
                                                  std::optional<int> rank_cap = std::nullopt,
                                                  const SearchBudget& budget = {64, 120, 1});

}  // namespace polyalg
