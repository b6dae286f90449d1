#include "polyalg/tensorize.hpp"

#include <algorithm>
#include <cmath>

#include "polyalg/exceptions.hpp"
#include "polyalg/norm_engine.hpp"

namespace polyalg {

CVec GTerm::eval(const CVec& x) const {
    const int n = form.degree();
    const CVec v = -approx->combine(x);
    return binomial(n, k) * form.eval_mixed(x, v, k);
}

std::vector<GTerm> g_terms(const SymmetricForm& form, const IdentityApproximation& approx) {
    if (form.degree() < 1) throw std::invalid_argument("g-terms need degree >= 1");
    std::vector<GTerm> out;
    out.reserve(form.degree());
    for (int k = 0; k < form.degree(); ++k) out.push_back(GTerm{k, form, &approx});
    return out;
}

namespace {

// max over K of prod_i |f_i(x)|^{beta_i}; exact on the finite point list.
double sup_f_product(const std::vector<int>& beta, const IdentityApproximation& approx,
                     const CompactSet& K) {
    double worst = 0.0;
    for (const CVec& x : K.points()) {
        double v = 1.0;
        for (int i : beta) v *= std::abs(approx.pairs()[i].f.eval_scalar(x));
        worst = std::max(worst, v);
    }
    return worst;
}

struct FormTensorizer {
    const CompactSet& K;
    const IdentityApproximation& approx;
    const SearchBudget& norm_budget;
    SpacePtr space;
    AlgebraPtr algebra;

    TensorizeOutput run(const SymmetricForm& form) {
        const int n = form.degree();
        const int m = static_cast<int>(approx.pairs().size());
        TensorElement element(space, algebra);
        double bound = 0.0;

        // Replace T(x^n) by -sum_{k<n} g_k(x); the dropped remainder is
        // T((x - sum f_i(x) a_i)^n), bounded by ||T|| eps^n on K.
        if (approx.epsilon() > 0.0) {
            const double t_norm = sup_norm_unit_ball(form, norm_budget).value;
            bound += 1.05 * t_norm * std::pow(approx.epsilon(), n);
        }

        for (int k = 0; k < n; ++k) {
            // g_k = C(n,k) (-1)^{n-k} sum_{|beta|=n-k} ((n-k)!/beta!)
            //         prod_i f_i^{beta_i} T(x^k, a^beta).
            const double sign = ((n - k) % 2 == 0) ? 1.0 : -1.0;
            for (const auto& beta : enumerate_multisets(m, n - k)) {
                const double coeff = -binomial(n, k) * sign * multiset_orderings(beta);

                PolynomialSum multiplier = scalar_constant_poly(Cx(coeff, 0), space);
                for (int i : beta) multiplier = multiplier * approx.pairs()[i].f;

                SymmetricForm partial = form;
                for (int i : beta) partial = partial.contract(approx.pairs()[i].a);

                if (k == 0) {
                    // Degree-0 core: multiplier (x) T(a^beta).
                    element.add_pair(multiplier, partial.eval(std::span<const CVec>{}));
                } else {
                    const TensorizeOutput sub = run(partial);
                    element.add_scaled(sub.element, multiplier);
                    bound += std::abs(coeff) * sup_f_product(beta, approx, K) * sub.certified_bound;
                }
            }
        }
        return TensorizeOutput{std::move(element), bound};
    }
};

}  // namespace

TensorizeOutput tensorize(const PolynomialSum& p, const CompactSet& K,
                          const IdentityApproximation& approx, const SearchBudget& norm_budget) {
    if (!same_space(p.source(), approx.space()) || !same_space(p.source(), K.space()))
        throw DimensionMismatch("polynomial, K and approximation must share one space");
    FormTensorizer tensorizer{K, approx, norm_budget, p.source(), p.target()};
    TensorElement element(p.source(), p.target());
    double bound = 0.0;
    for (const auto& [degree, part] : p.parts()) {
        if (degree == 0) {
            element.add_pair(scalar_constant_poly(Cx(1, 0), p.source()), part.constant_value());
            continue;
        }
        TensorizeOutput sub = tensorizer.run(polarize(part));
        element.append(sub.element);
        bound += sub.certified_bound;
    }
    return TensorizeOutput{std::move(element), bound};
}

double verify_tensorization(const PolynomialSum& p, const TensorElement& t, const CompactSet& K) {
    double worst = 0.0;
    for (const CVec& x : K.points())
        worst = std::max(worst, p.target()->element_norm(p.eval(x) - t.eval(x)));
    return worst;
}

}  // namespace polyalg
