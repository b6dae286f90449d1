#include "polyalg/hulls.hpp"

#include <algorithm>
#include <cmath>

#include "polyalg/exceptions.hpp"
#include "polyalg/norm_engine.hpp"
#include "polyalg/parallel.hpp"
#include "polyalg/products.hpp"
#include "polyalg/rng.hpp"

namespace polyalg {

namespace {

Cx int_power(Cx z, int n) {
    Cx r(1, 0);
    for (int k = 0; k < n; ++k) r *= z;
    return r;
}

/// Candidate polynomial c0 + sum_{n<=deg} sum_i psi_{n,i}(.)^n with cached
/// per-slot values on {a} + K, so single-coefficient ascent moves re-evaluate
/// one slot only.
class HullSearchState {
public:
    HullSearchState(const CVec& candidate, const CompactSet& K, int degree, int terms)
        : degree_(degree), terms_(terms), dim_(static_cast<int>(candidate.size())) {
        points_.push_back(candidate);
        for (const CVec& x : K.points()) points_.push_back(x);
        const int slots = degree_ * terms_;
        psi_.assign(slots, CVec::Zero(dim_));
        slot_values_.assign(slots + 1, std::vector<Cx>(points_.size(), Cx(0, 0)));
        totals_.assign(points_.size(), Cx(0, 0));
    }

    int param_count() const { return 2 * (1 + degree_ * terms_ * dim_); }

    void randomize(Rng& rng) {
        c0_ = 0.25 * rng.complex_normal();
        for (CVec& psi : psi_) psi = rng.complex_normal_vec(dim_) / std::sqrt(double(dim_));
        recompute();
    }

    /// Deterministic start: pure degree-1 functional aligned with the
    /// candidate (the separating witness whenever a linear one exists).
    void smart_start(const CVec& candidate, const NormSpec& norm) {
        c0_ = Cx(0, 0);
        for (CVec& psi : psi_) psi.setZero();
        CVec lead = norming_functional(norm, candidate);
        if (lead.cwiseAbs().maxCoeff() == 0.0) lead[0] = 1.0;
        psi_[0] = lead;
        recompute();
    }

    double ratio() const {
        double sup_k = 0.0;
        for (std::size_t p = 1; p < points_.size(); ++p)
            sup_k = std::max(sup_k, std::abs(totals_[p]));
        if (sup_k < 1e-300) return 0.0;
        return std::abs(totals_[0]) / sup_k;
    }

    /// Projected coordinate ascent on the ratio; returns the converged value.
    double ascend(int max_sweeps) {
        double best = ratio();
        double step = 0.5;
        for (int sweep = 0; sweep < max_sweeps; ++sweep) {
            const double sweep_start = best;
            bool improved = false;
            for (int param = 0; param < param_count(); ++param) {
                for (const double sign : {1.0, -1.0}) {
                    const double trial = try_move(param, sign * step);
                    if (trial > best) {
                        best = trial;
                        commit_move(param, sign * step);
                        improved = true;
                    }
                }
            }
            if (!improved) {
                step *= 0.5;
                if (step < 1e-9) break;
            } else if (best - sweep_start < 1e-12 * std::max(1.0, best)) {
                break;
            }
        }
        return best;
    }

    /// Scales the polynomial so that ||P||_K = 1 (no-op when degenerate).
    void normalize() {
        double sup_k = 0.0;
        for (std::size_t p = 1; p < points_.size(); ++p)
            sup_k = std::max(sup_k, std::abs(totals_[p]));
        if (sup_k < 1e-300) return;
        c0_ /= sup_k;
        for (int n = 1; n <= degree_; ++n) {
            const double scale = std::pow(sup_k, -1.0 / n);
            for (int i = 0; i < terms_; ++i) psi_[slot_of(n, i)] *= scale;
        }
        recompute();
    }

    PolynomialSum build(const SpacePtr& space) const {
        PolynomialSum poly = scalar_constant_poly(c0_, space);
        for (int n = 1; n <= degree_; ++n) {
            std::vector<PowerSumTerm> terms;
            for (int i = 0; i < terms_; ++i) {
                const CVec& psi = psi_[slot_of(n, i)];
                if (psi.cwiseAbs().maxCoeff() == 0.0) continue;
                terms.push_back(
                    PowerSumTerm{Cx(1, 0), LinearOperator{psi.transpose(), space, scalar_algebra()}});
            }
            if (!terms.empty())
                poly.add_part(PowerSumRep::homogeneous(n, std::move(terms), space, scalar_algebra()));
        }
        return poly;
    }

private:
    int slot_of(int n, int i) const { return (n - 1) * terms_ + i; }

    void recompute() {
        for (std::size_t p = 0; p < points_.size(); ++p) {
            slot_values_[0][p] = c0_;
            totals_[p] = c0_;
        }
        for (int n = 1; n <= degree_; ++n)
            for (int i = 0; i < terms_; ++i) {
                const int slot = slot_of(n, i);
                const CVec& psi = psi_[slot];
                for (std::size_t p = 0; p < points_.size(); ++p) {
                    const Cx v = int_power(psi.cwiseProduct(points_[p]).sum(), n);
                    slot_values_[slot + 1][p] = v;
                    totals_[p] += v;
                }
            }
    }

    struct Move {
        int slot;
        std::vector<Cx> values;
    };

    Move pending_;

    double try_move(int param, double delta) {
        const int real_index = param / 2;
        const bool imag = param % 2;
        pending_.values.assign(points_.size(), Cx(0, 0));
        if (real_index == 0) {
            const Cx c0 = c0_ + (imag ? Cx(0, delta) : Cx(delta, 0));
            pending_.slot = 0;
            for (std::size_t p = 0; p < points_.size(); ++p) pending_.values[p] = c0;
        } else {
            const int flat = real_index - 1;
            const int slot = flat / dim_;
            const int coord = flat % dim_;
            const int n = slot / terms_ + 1;
            CVec psi = psi_[slot];
            psi[coord] += imag ? Cx(0, delta) : Cx(delta, 0);
            pending_.slot = slot + 1;
            for (std::size_t p = 0; p < points_.size(); ++p)
                pending_.values[p] = int_power(psi.cwiseProduct(points_[p]).sum(), n);
        }
        double sup_k = 0.0, at_candidate = 0.0;
        for (std::size_t p = 0; p < points_.size(); ++p) {
            const Cx total = totals_[p] - slot_values_[pending_.slot][p] + pending_.values[p];
            if (p == 0) {
                at_candidate = std::abs(total);
            } else {
                sup_k = std::max(sup_k, std::abs(total));
            }
        }
        if (sup_k < 1e-300) return 0.0;
        return at_candidate / sup_k;
    }

    void commit_move(int param, double delta) {
        const int real_index = param / 2;
        const bool imag = param % 2;
        if (real_index == 0) {
            c0_ += imag ? Cx(0, delta) : Cx(delta, 0);
        } else {
            const int flat = real_index - 1;
            const int slot = flat / dim_;
            const int coord = flat % dim_;
            psi_[slot][coord] += imag ? Cx(0, delta) : Cx(delta, 0);
        }
        for (std::size_t p = 0; p < points_.size(); ++p) {
            totals_[p] += pending_.values[p] - slot_values_[pending_.slot][p];
            slot_values_[pending_.slot][p] = pending_.values[p];
        }
    }

    int degree_, terms_, dim_;
    Cx c0_{0, 0};
    std::vector<CVec> psi_;
    std::vector<CVec> points_;                  // candidate first, then K
    std::vector<std::vector<Cx>> slot_values_;  // [slot+1][point]; slot 0 = constant
    std::vector<Cx> totals_;
};

}  // namespace

HullCertificate hull_membership(const HullQuery& query) {
    if (query.candidate.size() != query.K.space()->dim)
        throw DimensionMismatch("candidate dimension does not match K");
    if (query.degree_cap < 1 || query.terms_cap < 1)
        throw std::invalid_argument("hull caps must be >= 1");

    HullCertificate cert;
    cert.degree_cap = query.degree_cap;
    cert.terms_cap = query.terms_cap;
    cert.budget = query.budget;
    const SpacePtr& space = query.K.space();
    const long restarts = std::max<long>(1, query.budget.samples);
    constexpr double kViolation = 1.0 + 1e-9;

    for (int degree = 1; degree <= query.degree_cap; ++degree) {
        // Restart 0 is the deterministic linear start; the rest are seeded.
        std::vector<double> ratios(restarts);
        parallel_for(restarts, [&](long r) {
            HullSearchState state(query.candidate, query.K, degree, query.terms_cap);
            if (r == 0) {
                state.smart_start(query.candidate, space->norm);
            } else {
                Rng rng(derive_seed(query.budget.seed, 0x8011u + degree, r));
                state.randomize(rng);
            }
            ratios[r] = state.ascend(query.budget.refine_steps);
        });

        long hit = -1;
        for (long r = 0; r < restarts; ++r) {
            cert.best_ratio = std::max(cert.best_ratio, ratios[r]);
            if (hit < 0 && ratios[r] > kViolation) hit = r;
        }
        if (hit < 0) continue;

        // Re-run the winning restart (deterministic) and normalize.
        HullSearchState state(query.candidate, query.K, degree, query.terms_cap);
        if (hit == 0) {
            state.smart_start(query.candidate, space->norm);
        } else {
            Rng rng(derive_seed(query.budget.seed, 0x8011u + degree, hit));
            state.randomize(rng);
        }
        state.ascend(query.budget.refine_steps);
        state.normalize();
        PolynomialSum witness = state.build(space);

        const double sup_k = uniform_norm_on_K(witness, query.K);
        const double at_candidate = std::abs(witness.eval_scalar(query.candidate));
        cert.verdict = HullCertificate::Verdict::Violated;
        cert.margin = at_candidate - sup_k;
        cert.witness = std::move(witness);
        return cert;
    }
    cert.verdict = HullCertificate::Verdict::NoViolationFound;
    return cert;
}

PointCharacter character_from_point(const CVec& a, const std::vector<PowerSumRep>& generators,
                                    const CompactSet& K, double tol) {
    PointCharacter chi;
    chi.point = a;
    for (const PowerSumRep& g : generators) {
        if (g.target()->dim() != 1) throw DimensionMismatch("generators must be scalar-valued");
        const double excess = std::abs(g.eval_scalar(a)) - uniform_norm_on_K(g, K);
        chi.max_bound_excess = std::max(chi.max_bound_excess, excess);
    }
    for (std::size_t i = 0; i < generators.size(); ++i)
        for (std::size_t j = i; j < generators.size(); ++j) {
            const PowerSumRep prod = product_power_sums(generators[i], generators[j]);
            const Cx lhs = prod.eval(a)[0];
            const Cx rhs = generators[i].eval_scalar(a) * generators[j].eval_scalar(a);
            chi.max_mult_residual = std::max(chi.max_mult_residual, std::abs(lhs - rhs));
        }
    chi.certified = chi.max_bound_excess <= tol && chi.max_mult_residual <= tol;
    return chi;
}

ProductCharacter product_character(const CVec& a, const Character& phi,
                                   const std::vector<PowerSumRep>& generators, const CompactSet& K,
                                   double tol) {
    ProductCharacter chi;
    chi.point = a;
    chi.phi = phi;
    for (const PowerSumRep& g : generators) {
        // phi o g is nuclear; its value at a is bounded by ||g||_K on the
        // certified hull.
        const PowerSumRep scalar = compose_character(phi, g);
        const double excess = std::abs(scalar.eval_scalar(a)) - uniform_norm_on_K(g, K);
        chi.max_bound_excess = std::max(chi.max_bound_excess, excess);
    }
    for (std::size_t i = 0; i < generators.size(); ++i)
        for (std::size_t j = i; j < generators.size(); ++j) {
            const PowerSumRep prod = product_power_sums(generators[i], generators[j]);
            const Cx lhs = phi.eval(prod.eval(a));
            const Cx rhs = phi.eval(generators[i].eval(a)) * phi.eval(generators[j].eval(a));
            chi.max_mult_residual = std::max(chi.max_mult_residual, std::abs(lhs - rhs));
        }
    chi.certified = chi.max_bound_excess <= tol && chi.max_mult_residual <= tol;
    return chi;
}

}  // namespace polyalg
