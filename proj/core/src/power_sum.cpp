#include "polyalg/power_sum.hpp"

#include <cmath>

#include "polyalg/exceptions.hpp"
#include "polyalg/products.hpp"

namespace polyalg {

bool same_space(const SpacePtr& a, const SpacePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->dim == b->dim && a->norm == b->norm;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->dim() != b->dim() || !(a->norm() == b->norm())) return false;
    if (a->identity() != b->identity()) return false;
    for (int i = 0; i < a->dim(); ++i)
        if (a->mult_op(i) != b->mult_op(i)) return false;
    return true;
}

PowerSumRep PowerSumRep::homogeneous(int degree, std::vector<PowerSumTerm> terms, SpacePtr source,
                                     AlgebraPtr target) {
    if (degree < 1) throw std::invalid_argument("homogeneous() requires degree >= 1");
    if (!source || !target) throw std::invalid_argument("power sum requires source and target");
    for (const PowerSumTerm& t : terms) {
        if (t.op.matrix.rows() != target->dim() || t.op.matrix.cols() != source->dim)
            throw DimensionMismatch("operator shape does not match source/target");
        if (!same_space(t.op.source, source) || !same_algebra(t.op.target, target))
            throw DimensionMismatch("all terms must share source and target");
    }
    PowerSumRep rep;
    rep.degree_ = degree;
    rep.terms_ = std::move(terms);
    rep.source_ = std::move(source);
    rep.target_ = std::move(target);
    return rep;
}

PowerSumRep PowerSumRep::constant(CVec value, SpacePtr source, AlgebraPtr target) {
    if (!source || !target) throw std::invalid_argument("power sum requires source and target");
    if (value.size() != target->dim()) throw DimensionMismatch("constant has wrong length");
    PowerSumRep rep;
    rep.degree_ = 0;
    rep.constant_ = std::move(value);
    rep.source_ = std::move(source);
    rep.target_ = std::move(target);
    return rep;
}

CVec PowerSumRep::eval(const CVec& x) const {
    if (x.size() != source_->dim) throw DimensionMismatch("point dimension does not match source");
    if (degree_ == 0) return constant_;
    CVec acc = CVec::Zero(target_->dim());
    for (const PowerSumTerm& t : terms_) acc += t.weight * target_->power(t.op.apply(x), degree_);
    return acc;
}

CVec eval_power_sum(const PowerSumRep& rep, const CVec& x) { return rep.eval(x); }

PowerSumRep absorb_weights(const PowerSumRep& rep) {
    if (rep.degree() < 1) throw std::invalid_argument("absorb_weights requires degree >= 1");
    std::vector<PowerSumTerm> terms;
    for (const PowerSumTerm& t : rep.terms()) {
        if (t.weight == Cx(0, 0)) continue;
        const Cx root = std::pow(t.weight, 1.0 / rep.degree());
        terms.push_back(PowerSumTerm{Cx(1, 0), LinearOperator{root * t.op.matrix, t.op.source, t.op.target}});
    }
    return PowerSumRep::homogeneous(rep.degree(), std::move(terms), rep.source(), rep.target());
}

PowerSumRep compose_character(const Character& chi, const PowerSumRep& rep) {
    if (chi.functional.size() != rep.target()->dim())
        throw DimensionMismatch("character length does not match target algebra");
    const AlgebraPtr scalars = scalar_algebra();
    if (rep.degree() == 0) {
        CVec value(1);
        value[0] = chi.eval(rep.constant_value());
        return PowerSumRep::constant(std::move(value), rep.source(), scalars);
    }
    std::vector<PowerSumTerm> terms;
    terms.reserve(rep.terms().size());
    for (const PowerSumTerm& t : rep.terms()) {
        // Row of phi composed with T: (phi o T)(x) = phi^T (T x).
        CMat row = chi.functional.transpose() * t.op.matrix;
        terms.push_back(PowerSumTerm{t.weight, LinearOperator{row, t.op.source, scalars}});
    }
    return PowerSumRep::homogeneous(rep.degree(), std::move(terms), rep.source(), scalars);
}

PolynomialSum::PolynomialSum(SpacePtr source, AlgebraPtr target)
    : source_(std::move(source)), target_(std::move(target)) {}

PolynomialSum::PolynomialSum(PowerSumRep part) : source_(part.source()), target_(part.target()) {
    add_part(std::move(part));
}

void PolynomialSum::add_part(PowerSumRep part) {
    if (!source_) {
        source_ = part.source();
        target_ = part.target();
    }
    if (!same_space(part.source(), source_) || !same_algebra(part.target(), target_))
        throw DimensionMismatch("polynomial parts must share source and target");
    auto it = parts_.find(part.degree());
    if (it == parts_.end()) {
        parts_.emplace(part.degree(), std::move(part));
        return;
    }
    if (part.degree() == 0) {
        it->second = PowerSumRep::constant(it->second.constant_value() + part.constant_value(),
                                           source_, target_);
        return;
    }
    std::vector<PowerSumTerm> terms = it->second.terms();
    terms.insert(terms.end(), part.terms().begin(), part.terms().end());
    it->second = PowerSumRep::homogeneous(part.degree(), std::move(terms), source_, target_);
}

CVec PolynomialSum::eval(const CVec& x) const {
    if (!target_) throw ComputeError("empty polynomial sum has no target");
    CVec acc = CVec::Zero(target_->dim());
    for (const auto& [deg, part] : parts_) acc += part.eval(x);
    return acc;
}

PolynomialSum PolynomialSum::operator+(const PolynomialSum& other) const {
    PolynomialSum out = *this;
    for (const auto& [deg, part] : other.parts_) out.add_part(part);
    return out;
}

PolynomialSum PolynomialSum::operator*(const PolynomialSum& other) const {
    PolynomialSum out(source_, target_);
    for (const auto& [dl, left] : parts_)
        for (const auto& [dr, right] : other.parts_) out.add_part(product_power_sums(left, right));
    return out;
}

PolynomialSum scalar_constant_poly(Cx value, SpacePtr source) {
    CVec v(1);
    v[0] = value;
    return PolynomialSum(PowerSumRep::constant(std::move(v), std::move(source), scalar_algebra()));
}

PolynomialSum scalar_functional_poly(const CVec& functional_row, SpacePtr source) {
    CMat row = functional_row.transpose();
    std::vector<PowerSumTerm> terms{
        PowerSumTerm{Cx(1, 0), LinearOperator{row, source, scalar_algebra()}}};
    return PolynomialSum(
        PowerSumRep::homogeneous(1, std::move(terms), std::move(source), scalar_algebra()));
}

}  // namespace polyalg
