#pragma once

#include <vector>

#include "polyalg/power_sum.hpp"

namespace polyalg {

struct TensorPair {
    PolynomialSum f;  // scalar polynomial on E
    CVec a;           // algebra element
};

/// Finite sum sum_i f_i (x) a_i with scalar polynomial functions f_i and
/// algebra elements a_i; the concrete form of elements of the injective
/// tensor product at desk scale.
class TensorElement {
public:
    TensorElement(SpacePtr source, AlgebraPtr target);

    void add_pair(PolynomialSum f, CVec a);
    void append(const TensorElement& other);

    /// Appends `other` with every f multiplied by `factor` (exact polynomial
    /// product).
    void add_scaled(const TensorElement& other, const PolynomialSum& factor);

    const std::vector<TensorPair>& pairs() const { return pairs_; }
    const SpacePtr& source() const { return source_; }
    const AlgebraPtr& target() const { return target_; }

    CVec eval(const CVec& x) const;

private:
    std::vector<TensorPair> pairs_;
    SpacePtr source_;
    AlgebraPtr target_;
};

}  // namespace polyalg
