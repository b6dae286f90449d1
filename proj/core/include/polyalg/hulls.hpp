#pragma once

#include <optional>
#include <vector>

#include "polyalg/algebra.hpp"
#include "polyalg/budget.hpp"
#include "polyalg/compact_set.hpp"
#include "polyalg/power_sum.hpp"

namespace polyalg {

struct HullQuery {
    CVec candidate;
    CompactSet K;
    int degree_cap = 4;
    int terms_cap = 4;
    SearchBudget budget;  // samples = random restarts per degree
};

/// Outcome of the falsification search. "no-violation-found" is scoped by the
/// caps and budget and is explicitly not a membership proof.
struct HullCertificate {
    enum class Verdict { Violated, NoViolationFound };

    Verdict verdict = Verdict::NoViolationFound;
    std::optional<PolynomialSum> witness;  // normalized to ||P||_K = 1 when violated
    double margin = 0.0;                   // |P(a)| - ||P||_K of the witness
    double best_ratio = 0.0;               // best |P(a)| / ||P||_K seen
    int degree_cap = 0;
    int terms_cap = 0;
    SearchBudget budget;
};

/// Searches scalar nuclear polynomials within the caps for |P(a)| > ||P||_K,
/// by seeded random restarts plus coordinate ascent on the functional
/// coefficients. Degrees are explored in increasing order with per-degree
/// seed schedules, so raising the degree cap only extends the search.
HullCertificate hull_membership(const HullQuery& query);

/// Evaluation functional P -> P(a) on the span of scalar generators, with
/// multiplicativity (via power-sum products) and |P(a)| <= ||P||_K checks.
struct PointCharacter {
    CVec point;
    double max_mult_residual = 0.0;
    double max_bound_excess = 0.0;
    bool certified = false;

    Cx eval(const PowerSumRep& p) const { return p.eval(point)[0]; }
    Cx eval(const PolynomialSum& p) const { return p.eval(point)[0]; }
};

PointCharacter character_from_point(const CVec& a, const std::vector<PowerSumRep>& generators,
                                    const CompactSet& K, double tol = 1e-9);

/// chi_{a,phi}: P -> phi(P(a)) on A-valued generators; multiplicativity and
/// the ||.||_K bound are verified through compose_character and products.
struct ProductCharacter {
    CVec point;
    Character phi;
    double max_mult_residual = 0.0;
    double max_bound_excess = 0.0;
    bool certified = false;

    Cx eval(const PowerSumRep& p) const { return phi.eval(p.eval(point)); }
};

ProductCharacter product_character(const CVec& a, const Character& phi,
                                   const std::vector<PowerSumRep>& generators, const CompactSet& K,
                                   double tol = 1e-9);

}  // namespace polyalg
