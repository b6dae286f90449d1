#pragma once

#include <vector>

#include "polyalg/budget.hpp"
#include "polyalg/norm_spec.hpp"
#include "polyalg/types.hpp"

namespace polyalg {

/// Finite-dimensional commutative unital Banach algebra, given by the
/// structure tensor c[i][j][k] of its basis products e_i e_j = sum_k c[i][j][k] e_k,
/// the coefficient vector of the identity, and a norm.
///
/// Construction validates commutativity (exact on the stored tensor),
/// associativity and the unit laws (1e-12 on all basis triples/pairs).
/// The declared submultiplicativity constant is a statement about the norm,
/// checked statistically by the test suites rather than at construction.
class FiniteBanachAlgebra {
public:
    FiniteBanachAlgebra(std::vector<CMat> basis_mult_ops, CVec identity, NormSpec norm,
                        double submult_constant = 1.0);

    /// Pointwise multiplication algebra: diagonal structure tensor,
    /// identity = all-ones. Norm must be a p-norm or the sup norm.
    static FiniteBanachAlgebra pointwise(int dim, NormSpec norm);

    /// Product on an arbitrary normed space from a functional psi and a unit
    /// vector e with psi(e) != 0:
    ///   ab = psi(b) x + psi(a) y + psi(a) psi(b) e,  a = x + psi(a) e.
    /// The algebra norm is |psi(a)| + ||x|| over the space's base norm.
    static FiniteBanachAlgebra lourenco(const FiniteSpace& space, const CVec& psi, const CVec& e);

    int dim() const { return dim_; }
    const NormSpec& norm() const { return norm_; }
    const CVec& identity() const { return identity_; }
    double submult_constant() const { return submult_constant_; }

    /// Matrix of b -> e_i b; entry (k, j) is c[i][j][k].
    const CMat& mult_op(int i) const { return mult_ops_[i]; }
    Cx structure(int i, int j, int k) const { return mult_ops_[i](k, j); }
    bool is_diagonal() const { return diagonal_; }

    CVec mul(const CVec& a, const CVec& b) const;
    CVec power(const CVec& a, int n) const;
    double element_norm(const CVec& a) const;

    /// Matrix of b -> a b.
    CMat multiplication_matrix(const CVec& a) const;

private:
    int dim_;
    std::vector<CMat> mult_ops_;
    CVec identity_;
    NormSpec norm_;
    double submult_constant_;
    bool diagonal_;
};

inline CVec alg_mul(const FiniteBanachAlgebra& algebra, const CVec& a, const CVec& b) {
    return algebra.mul(a, b);
}
inline double alg_norm(const FiniteBanachAlgebra& algebra, const CVec& a) {
    return algebra.element_norm(a);
}

AlgebraPtr make_pointwise_algebra(int dim, const NormSpec& norm);
AlgebraPtr make_lourenco_algebra(const FiniteSpace& space, const CVec& psi, const CVec& e);

/// The scalars C as a 1-dimensional pointwise algebra (shared instance).
AlgebraPtr scalar_algebra();

/// Multiplicative unital functional phi, acting as phi(a) = sum_k phi[k] a[k].
struct Character {
    CVec functional;

    Cx eval(const CVec& a) const { return functional.cwiseProduct(a).sum(); }
};

struct CharacterValidation {
    double mult_residual = 0.0;
    double unit_residual = 0.0;

    bool ok(double tol = 1e-10) const { return mult_residual <= tol && unit_residual <= tol; }
};

CharacterValidation validate_character(const FiniteBanachAlgebra& algebra, const Character& chi);

/// All characters of the algebra, sorted canonically.
///
/// Diagonal structure tensors yield exactly the coordinate evaluations. In
/// general the characters are recovered from the left eigenvectors of the
/// regular representation on the semisimple quotient A / rad(A), where the
/// radical is read off the trace form G_ij = tr(M_i M_j). Throws
/// UnsupportedAlgebra when no joint eigenbasis emerges numerically; a partial
/// set is never returned.
std::vector<Character> enumerate_characters(const FiniteBanachAlgebra& algebra);

/// Lower bound for sup{|phi(a)| : ||phi||* <= 1} by seeded random functionals
/// plus local refinement inside the dual ball. By Hahn-Banach the supremum is
/// ||a||; the reported value never exceeds element_norm(a) + 1e-9.
NormEstimate dual_norm_sup(const FiniteBanachAlgebra& algebra, const CVec& a,
                           const SearchBudget& budget);

/// Empirical max of ||ab|| / (||a|| ||b||) over seeded random pairs.
double measure_submult_constant(const FiniteBanachAlgebra& algebra, int samples,
                                std::uint64_t seed);

}  // namespace polyalg
