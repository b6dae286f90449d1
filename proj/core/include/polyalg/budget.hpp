#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polyalg/types.hpp"

namespace polyalg {

struct SearchBudget {
    long samples = 4096;
    int refine_steps = 200;
    std::uint64_t seed = 0;
};

/// Maximizer found by a search: a point on a sphere, a functional in a dual
/// ball, an n-tuple of sphere points, or a (point, functional) pair.
struct Witness {
    std::string kind;  // "point" | "functional" | "tuple" | "point+functional"
    std::vector<CVec> vectors;
};

/// Certified lower bound: `value` is attained by `witness` (re-evaluation
/// reproduces it to 1e-9).
struct NormEstimate {
    double value = 0.0;
    Witness witness;
    SearchBudget budget_used;
};

}  // namespace polyalg
