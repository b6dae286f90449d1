#include "polyalg/tensor_element.hpp"

#include "polyalg/exceptions.hpp"

namespace polyalg {

TensorElement::TensorElement(SpacePtr source, AlgebraPtr target)
    : source_(std::move(source)), target_(std::move(target)) {}

void TensorElement::add_pair(PolynomialSum f, CVec a) {
    if (a.size() != target_->dim()) throw DimensionMismatch("algebra element has wrong length");
    if (!f.empty() && !same_space(f.source(), source_))
        throw DimensionMismatch("tensor pair function lives on the wrong space");
    pairs_.push_back(TensorPair{std::move(f), std::move(a)});
}

void TensorElement::append(const TensorElement& other) {
    for (const TensorPair& p : other.pairs_) pairs_.push_back(p);
}

void TensorElement::add_scaled(const TensorElement& other, const PolynomialSum& factor) {
    for (const TensorPair& p : other.pairs_) pairs_.push_back(TensorPair{factor * p.f, p.a});
}

CVec TensorElement::eval(const CVec& x) const {
    CVec acc = CVec::Zero(target_->dim());
    for (const TensorPair& p : pairs_) acc += p.f.eval_scalar(x) * p.a;
    return acc;
}

}  // namespace polyalg
