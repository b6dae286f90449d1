#pragma once

#include <limits>
#include <memory>

#include "polyalg/types.hpp"

namespace polyalg {

/// Norm description for a finite-dimensional complex space.
///
/// Three kinds: p-norms (p in [1, inf]), the sup norm, and the Lourenco norm
/// |psi(a)| + ||a - psi(a) e||_base attached to a functional psi and a unit
/// vector e with psi(e) = 1 (psi is rescaled at construction so that the
/// decomposition a = x + psi(a) e with x in ker psi is exact).
struct NormSpec {
    enum class Kind { PNorm, Sup, Lourenco };

    Kind kind = Kind::Sup;
    double p = 2.0;  // PNorm only; may be infinity
    CVec psi;        // Lourenco only
    CVec unit;       // Lourenco only
    std::shared_ptr<const NormSpec> base;  // Lourenco only; PNorm or Sup

    static NormSpec p_norm(double p);
    static NormSpec sup() { return NormSpec{}; }
    static NormSpec lourenco(CVec psi, CVec unit, const NormSpec& base);

    bool operator==(const NormSpec& other) const;
};

struct FiniteSpace {
    int dim = 1;
    NormSpec norm;

    FiniteSpace() = default;
    FiniteSpace(int dim, NormSpec norm);
};

double vector_norm(const NormSpec& spec, const CVec& v);

/// Norm of the functional a -> sum_k phi[k] a[k] on the dual of `spec`.
/// Exact for p/sup norms (Holder); for Lourenco norms an upper bound
/// max(|phi(e)|, min_t ||phi - t psi||_base*) with the minimum refined
/// numerically (any t gives a valid upper bound).
double dual_norm_upper(const NormSpec& spec, const CVec& phi);

/// A functional phi with dual norm <= 1 and phi(a) = ||a||. Closed form for
/// p/sup norms and for Lourenco norms over a p/sup base.
CVec norming_functional(const NormSpec& spec, const CVec& a);

/// Radial projection v / ||v|| onto the unit sphere (e_0 for v = 0).
CVec project_to_sphere(const NormSpec& spec, const CVec& v);

}  // namespace polyalg
