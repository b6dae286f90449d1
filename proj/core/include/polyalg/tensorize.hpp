#pragma once

#include <vector>

#include "polyalg/budget.hpp"
#include "polyalg/compact_set.hpp"
#include "polyalg/identity_approx.hpp"
#include "polyalg/symmetric_form.hpp"
#include "polyalg/tensor_element.hpp"

namespace polyalg {

/// Correction term g_k(x) = C(n,k) T(x^k, (-sum f_i(x) a_i)^(n-k)).
/// Together with T(x^n) the g_k telescope to T((x - sum f_i(x) a_i)^n).
struct GTerm {
    int k = 0;
    SymmetricForm form;
    const IdentityApproximation* approx = nullptr;

    CVec eval(const CVec& x) const;
};

std::vector<GTerm> g_terms(const SymmetricForm& form, const IdentityApproximation& approx);

struct TensorizeOutput {
    TensorElement element;
    double certified_bound = 0.0;
};

/// Rewrites P as an element of the span of (scalar polynomial) x (algebra
/// element) pairs, following the inductive correction-term construction:
/// the degree-n part is replaced by -sum_k g_k, each g_k expanded over
/// multisets of approximation indices into exact scalar-polynomial
/// multipliers times recursively tensorized degree-k forms.
///
/// The certified bound accumulates 1.05 * (estimated ||T||) * eps^n per
/// recursion level (zero when eps = 0, where the rewrite is exact on K).
TensorizeOutput tensorize(const PolynomialSum& p, const CompactSet& K,
                          const IdentityApproximation& approx,
                          const SearchBudget& norm_budget = {1024, 120, 7});

/// Exact max over K of ||P(x) - t(x)||.
double verify_tensorization(const PolynomialSum& p, const TensorElement& t, const CompactSet& K);

}  // namespace polyalg
