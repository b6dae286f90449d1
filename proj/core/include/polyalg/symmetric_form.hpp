#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "polyalg/power_sum.hpp"
#include "polyalg/types.hpp"

namespace polyalg {

/// Multiset key i_1 <= ... <= i_n packed 8 bits per index (n <= 8, dim <= 256).
std::uint64_t encode_multiset(std::span<const int> sorted_indices);
std::vector<int> decode_multiset(std::uint64_t key, int degree);

/// All sorted index tuples of the given length over {0, ..., dim-1}.
std::vector<std::vector<int>> enumerate_multisets(int dim, int length);

/// Number of distinct orderings of a sorted multiset, n! / prod(mult!).
double multiset_orderings(std::span<const int> sorted_indices);

/// A-valued symmetric n-linear form, stored by its values on sorted
/// basis multisets; multinomial bookkeeping happens at evaluation.
class SymmetricForm {
public:
    SymmetricForm(int degree, SpacePtr source, AlgebraPtr target);

    int degree() const { return degree_; }
    const SpacePtr& source() const { return source_; }
    const AlgebraPtr& target() const { return target_; }

    void set_coeff(std::span<const int> sorted_indices, CVec value);
    const CVec& coeff(std::span<const int> sorted_indices) const;
    const std::vector<std::pair<std::uint64_t, CVec>>& coeffs() const { return coeffs_; }

    /// Full multilinear evaluation T(x_1, ..., x_n).
    CVec eval(std::span<const CVec> args) const;

    /// Diagonal T(x, ..., x) via the multinomial expansion.
    CVec eval_diag(const CVec& x) const;

    /// T(x^k, y^(n-k)).
    CVec eval_mixed(const CVec& x, const CVec& y, int k) const;

    /// Partial application T(., ..., ., v): a symmetric form of degree n-1.
    SymmetricForm contract(const CVec& v) const;

private:
    int degree_;
    SpacePtr source_;
    AlgebraPtr target_;
    std::vector<std::pair<std::uint64_t, CVec>> coeffs_;  // sorted by key
};

CVec eval_form(const SymmetricForm& form, std::span<const CVec> args);

/// Recovers the unique symmetric form with diagonal P via
///   T(x_1,...,x_n) = 1/(2^n n!) sum_{eps_j = +-1} eps_1...eps_n P(sum eps_j x_j),
/// applied to basis-vector arguments.
SymmetricForm polarize(const PowerSumRep& rep);

/// Terms (C(n,k), T(x^k, y^(n-k))) for k = 0..n; their weighted sum is
/// T((x+y)^n).
std::vector<std::pair<double, CVec>> leibniz_expand(const SymmetricForm& form, const CVec& x,
                                                    const CVec& y);

}  // namespace polyalg
