#pragma once

#include <map>
#include <vector>

#include "polyalg/algebra.hpp"
#include "polyalg/norm_spec.hpp"
#include "polyalg/types.hpp"

namespace polyalg {

/// Bounded linear operator E -> A as a dim(A) x dim(E) matrix. Scalar
/// functionals are the dim(A) = 1 case.
struct LinearOperator {
    CMat matrix;
    SpacePtr source;
    AlgebraPtr target;

    CVec apply(const CVec& x) const { return matrix * x; }
};

struct PowerSumTerm {
    Cx weight;
    LinearOperator op;
};

/// Weighted power-sum representation of an n-homogeneous A-valued
/// polynomial, P(x) = sum_i w_i T_i(x)^n. Degree 0 stores a constant
/// algebra element instead of terms.
class PowerSumRep {
public:
    static PowerSumRep homogeneous(int degree, std::vector<PowerSumTerm> terms, SpacePtr source,
                                   AlgebraPtr target);
    static PowerSumRep constant(CVec value, SpacePtr source, AlgebraPtr target);

    int degree() const { return degree_; }
    const std::vector<PowerSumTerm>& terms() const { return terms_; }
    const CVec& constant_value() const { return constant_; }
    const SpacePtr& source() const { return source_; }
    const AlgebraPtr& target() const { return target_; }
    bool is_scalar() const { return target_->dim() == 1; }

    CVec eval(const CVec& x) const;

    /// Scalar shortcut for dim(A) = 1 representations.
    Cx eval_scalar(const CVec& x) const { return eval(x)[0]; }

private:
    PowerSumRep() = default;

    int degree_ = 0;
    std::vector<PowerSumTerm> terms_;
    CVec constant_;
    SpacePtr source_;
    AlgebraPtr target_;
};

CVec eval_power_sum(const PowerSumRep& rep, const CVec& x);

/// Rewrites every term with weight 1 via the principal n-th root,
/// (w, T) -> (1, w^{1/n} T); zero-weight terms are dropped.
PowerSumRep absorb_weights(const PowerSumRep& rep);

struct Character;

/// phi o P as a scalar power sum: functionals psi_i = phi o T_i, weights kept.
PowerSumRep compose_character(const Character& chi, const PowerSumRep& rep);

/// P = P_0 + ... + P_n with at most one homogeneous part per degree.
class PolynomialSum {
public:
    PolynomialSum() = default;
    PolynomialSum(SpacePtr source, AlgebraPtr target);
    explicit PolynomialSum(PowerSumRep part);

    void add_part(PowerSumRep part);  // merges with an existing part of equal degree

    const std::map<int, PowerSumRep>& parts() const { return parts_; }
    int degree() const { return parts_.empty() ? 0 : parts_.rbegin()->first; }
    const SpacePtr& source() const { return source_; }
    const AlgebraPtr& target() const { return target_; }
    bool empty() const { return parts_.empty(); }

    CVec eval(const CVec& x) const;
    Cx eval_scalar(const CVec& x) const { return eval(x)[0]; }

    PolynomialSum operator+(const PolynomialSum& other) const;
    PolynomialSum operator*(const PolynomialSum& other) const;  // power-sum products per part

private:
    std::map<int, PowerSumRep> parts_;
    SpacePtr source_;
    AlgebraPtr target_;
};

/// Scalar helpers (target = scalar_algebra()).
PolynomialSum scalar_constant_poly(Cx value, SpacePtr source);
PolynomialSum scalar_functional_poly(const CVec& functional_row, SpacePtr source);

bool same_space(const SpacePtr& a, const SpacePtr& b);
bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

}  // namespace polyalg
