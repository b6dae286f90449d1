#include "polyalg/norm_engine.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

#include "polyalg/exceptions.hpp"
#include "polyalg/search.hpp"

namespace polyalg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double conjugate_exponent(double p) {
    if (p == 1.0) return kInf;
    if (std::isinf(p)) return 1.0;
    return p / (p - 1.0);
}

bool is_p_like(const NormSpec& s) { return s.kind != NormSpec::Kind::Lourenco; }

double as_exponent(const NormSpec& s) { return s.kind == NormSpec::Kind::Sup ? kInf : s.p; }

/// Unit vector x (in `source`) with psi(x) = dual norm of psi. Requires a
/// p/sup source norm.
CVec primal_norming_vector(const NormSpec& source, const CVec& psi_row) {
    const double q = conjugate_exponent(as_exponent(source));
    const NormSpec dual_spec = std::isinf(q) ? NormSpec::sup() : NormSpec::p_norm(q);
    return norming_functional(dual_spec, psi_row);
}

}  // namespace

double uniform_norm_on_K(const std::function<CVec(const CVec&)>& f, const CompactSet& K,
                         const FiniteBanachAlgebra& target) {
    double best = 0.0;
    for (const CVec& x : K.points()) best = std::max(best, target.element_norm(f(x)));
    return best;
}

double uniform_norm_on_K(const PowerSumRep& p, const CompactSet& K) {
    return uniform_norm_on_K([&](const CVec& x) { return p.eval(x); }, K, *p.target());
}

double uniform_norm_on_K(const PolynomialSum& p, const CompactSet& K) {
    return uniform_norm_on_K([&](const CVec& x) { return p.eval(x); }, K, *p.target());
}

double uniform_norm_on_K(const TensorElement& t, const CompactSet& K) {
    return uniform_norm_on_K([&](const CVec& x) { return t.eval(x); }, K, *t.target());
}

bool operator_norm_is_exact(const NormSpec& source, const NormSpec& target) {
    if (!is_p_like(source)) return false;
    if (as_exponent(source) == 1.0) return true;           // column maximum
    if (!is_p_like(target)) return false;
    if (std::isinf(as_exponent(target))) return true;      // row duals
    if (as_exponent(source) == 2.0 && as_exponent(target) == 2.0) return true;  // SVD
    return false;
}

NormEstimate operator_norm(const LinearOperator& op, const SearchBudget& budget) {
    const NormSpec& source = op.source->norm;
    const NormSpec& target = op.target->norm();
    const auto finish = [&](CVec x) {
        x = project_to_sphere(source, x);
        return NormEstimate{op.target->element_norm(op.apply(x)), Witness{"point", {x}}, budget};
    };

    if (op.target->dim() == 1 && is_p_like(source) && is_p_like(target)) {
        // Functional: witness is the Holder vector of the single row.
        return finish(primal_norming_vector(source, CVec(op.matrix.row(0).transpose())));
    }
    if (is_p_like(source) && as_exponent(source) == 1.0) {
        int best = 0;
        double best_norm = -1.0;
        for (int j = 0; j < op.matrix.cols(); ++j) {
            const double n = op.target->element_norm(op.matrix.col(j));
            if (n > best_norm) {
                best_norm = n;
                best = j;
            }
        }
        CVec e = CVec::Zero(op.matrix.cols());
        e[best] = 1.0;
        return finish(std::move(e));
    }
    if (is_p_like(source) && is_p_like(target) && std::isinf(as_exponent(target))) {
        int best = 0;
        double best_norm = -1.0;
        for (int k = 0; k < op.matrix.rows(); ++k) {
            const double n = dual_norm_upper(source, op.matrix.row(k).transpose());
            if (n > best_norm) {
                best_norm = n;
                best = k;
            }
        }
        return finish(primal_norming_vector(source, CVec(op.matrix.row(best).transpose())));
    }
    Eigen::JacobiSVD<CMat> svd(op.matrix, Eigen::ComputeFullV);
    if (is_p_like(source) && is_p_like(target) && as_exponent(source) == 2.0 &&
        as_exponent(target) == 2.0) {
        return finish(svd.matrixV().col(0));
    }

    // General pair: seeded sphere search with the SVD vector and basis
    // vectors as starts.
    SearchProblem problem;
    problem.stream = 0x09E7A70Bu;
    const int d = op.source->dim;
    problem.sample = [d](Rng& rng) { return rng.complex_normal_vec(d); };
    problem.project = [&source](const CVec& x) { return project_to_sphere(source, x); };
    problem.objective = [&op](const CVec& x) { return op.target->element_norm(op.apply(x)); };
    problem.smart_starts.push_back(svd.matrixV().col(0));
    for (int k = 0; k < d; ++k) {
        CVec e = CVec::Zero(d);
        e[k] = 1.0;
        problem.smart_starts.push_back(std::move(e));
    }
    auto [value, x] = seeded_max_search(problem, budget);
    return NormEstimate{value, Witness{"point", {x}}, budget};
}

NormEstimate sup_norm_unit_ball(const PowerSumRep& p, const SearchBudget& budget,
                                const std::vector<CVec>& extra_starts) {
    const SpacePtr& space = p.source();
    const int d = space->dim;

    SearchProblem problem;
    problem.stream = 0x5B4A11u;
    problem.sample = [d](Rng& rng) { return rng.complex_normal_vec(d); };
    problem.project = [&space](const CVec& x) { return project_to_sphere(space->norm, x); };
    problem.objective = [&p](const CVec& x) { return p.target()->element_norm(p.eval(x)); };
    for (const CVec& s : extra_starts) problem.smart_starts.push_back(s);
    for (int k = 0; k < d; ++k) {
        CVec e = CVec::Zero(d);
        e[k] = 1.0;
        problem.smart_starts.push_back(std::move(e));
    }
    if (p.degree() >= 1) {
        for (const PowerSumTerm& t : p.terms()) {
            if (t.op.matrix.rows() == 1 && is_p_like(space->norm)) {
                problem.smart_starts.push_back(
                    primal_norming_vector(space->norm, CVec(t.op.matrix.row(0).transpose())));
            } else {
                Eigen::JacobiSVD<CMat> svd(t.op.matrix, Eigen::ComputeFullV);
                problem.smart_starts.push_back(svd.matrixV().col(0));
            }
        }
    }
    auto [value, x] = seeded_max_search(problem, budget);
    return NormEstimate{value, Witness{"point", {x}}, budget};
}

NormEstimate sup_norm_unit_ball(const SymmetricForm& form, const SearchBudget& budget,
                                const std::vector<CVec>& extra_starts) {
    const SpacePtr& space = form.source();
    const int d = space->dim;
    const int n = form.degree();
    if (n < 1) throw std::invalid_argument("form norm requires degree >= 1");

    const auto split = [d, n](const CVec& stacked) {
        std::vector<CVec> args(n);
        for (int j = 0; j < n; ++j) args[j] = stacked.segment(j * d, d);
        return args;
    };

    SearchProblem problem;
    problem.stream = 0xF02A17u;
    problem.sample = [d, n](Rng& rng) { return rng.complex_normal_vec(n * d); };
    problem.project = [&space, d, n](const CVec& stacked) {
        CVec out(n * d);
        for (int j = 0; j < n; ++j)
            out.segment(j * d, d) = project_to_sphere(space->norm, stacked.segment(j * d, d));
        return out;
    };
    problem.objective = [&form, split](const CVec& stacked) {
        const std::vector<CVec> args = split(stacked);
        return form.target()->element_norm(form.eval(args));
    };

    auto stack_diag = [d, n](const CVec& x) {
        CVec out(n * d);
        for (int j = 0; j < n; ++j) out.segment(j * d, d) = x;
        return out;
    };
    for (const CVec& s : extra_starts)
        problem.smart_starts.push_back(s.size() == n * d ? s : stack_diag(s));
    for (int k = 0; k < d; ++k) {
        CVec e = CVec::Zero(d);
        e[k] = 1.0;
        problem.smart_starts.push_back(stack_diag(e));
    }
    // The basis tuple of the largest stored coefficient evaluates to exactly
    // that coefficient; a strong deterministic start.
    double best_coeff = -1.0;
    std::uint64_t best_key = 0;
    for (const auto& [key, c] : form.coeffs()) {
        const double v = form.target()->element_norm(c);
        if (v > best_coeff) {
            best_coeff = v;
            best_key = key;
        }
    }
    if (best_coeff >= 0.0) {
        const std::vector<int> idx = decode_multiset(best_key, n);
        CVec stacked = CVec::Zero(n * d);
        for (int j = 0; j < n; ++j) stacked[j * d + idx[j]] = 1.0;
        problem.smart_starts.push_back(std::move(stacked));
    }

    auto [value, stacked] = seeded_max_search(problem, budget);
    return NormEstimate{value, Witness{"tuple", split(stacked)}, budget};
}

double nuclear_norm_upper(const PowerSumRep& p) {
    if (p.degree() == 0) return p.target()->element_norm(p.constant_value());
    const SearchBudget default_budget{1024, 120, 0x230CF5u};
    double sum = 0.0;
    for (const PowerSumTerm& t : p.terms()) {
        const double op_norm = operator_norm(t.op, default_budget).value;
        sum += std::abs(t.weight) * std::pow(op_norm, p.degree());
    }
    return sum;
}

GrowthBoundReport check_growth_bound(const PowerSumRep& p, const CompactSet& K) {
    GrowthBoundReport report;
    report.lhs = uniform_norm_on_K(p, K);
    report.rhs = std::pow(K.radius(), p.degree()) * nuclear_norm_upper(p);
    report.satisfied = report.lhs <= report.rhs + 1e-9;
    return report;
}

NormEstimate injective_tensor_norm(const TensorElement& t, const CompactSet& K,
                                   const SearchBudget& budget) {
    // sup_{x in K} sup_{phi in A*_1} |sum f_i(x) phi(a_i)| = sup_x ||t(x)||,
    // with the inner sup delegated to the dual-ball search.
    NormEstimate best;
    best.budget_used = budget;
    bool first = true;
    for (const CVec& x : K.points()) {
        const CVec value = t.eval(x);
        NormEstimate inner = dual_norm_sup(*t.target(), value, budget);
        if (first || inner.value > best.value) {
            first = false;
            best.value = inner.value;
            best.witness = Witness{"point+functional", {x, inner.witness.vectors[0]}};
        }
    }
    return best;
}

}  // namespace polyalg
