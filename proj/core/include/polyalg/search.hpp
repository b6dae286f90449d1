#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "polyalg/budget.hpp"
#include "polyalg/rng.hpp"
#include "polyalg/types.hpp"

namespace polyalg {

/// Seeded maximization over a projected domain (sphere, dual ball, tuple of
/// spheres). `sample` draws a raw candidate, `project` maps any vector into
/// the feasible set, `objective` is the score to maximize. `smart_starts`
/// are deterministic candidates that are always refined.
struct SearchProblem {
    std::function<CVec(Rng&)> sample;
    std::function<CVec(const CVec&)> project;
    std::function<double(const CVec&)> objective;
    std::vector<CVec> smart_starts;
    std::uint64_t stream = 0;
    double step_init = 0.5;
};

/// Deterministic block search. Candidate i is generated from
/// derive_seed(budget.seed, stream, i); the estimate is the max of all raw
/// candidate scores, the refined best of every full 64-candidate block, and
/// the refined smart starts. Increasing `samples` under the same seed
/// schedule therefore never decreases the result, and the outcome is
/// independent of the internal thread count.
std::pair<double, CVec> seeded_max_search(const SearchProblem& problem,
                                          const SearchBudget& budget);

/// Projected coordinate-wise ascent: perturbs each real coordinate by a
/// shrinking step schedule, re-projects, keeps improvements. Stops after
/// `refine_steps` sweeps or when a sweep improves by less than 1e-12
/// relatively.
std::pair<double, CVec> refine_ascent(const SearchProblem& problem, CVec start,
                                      int refine_steps);

}  // namespace polyalg
