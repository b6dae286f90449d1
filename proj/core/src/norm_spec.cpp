#include "polyalg/norm_spec.hpp"

#include <algorithm>
#include <cmath>

#include "polyalg/exceptions.hpp"

namespace polyalg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double p_vector_norm(double p, const CVec& v) {
    if (std::isinf(p)) return v.size() ? v.cwiseAbs().maxCoeff() : 0.0;
    if (p == 1.0) return v.cwiseAbs().sum();
    if (p == 2.0) return v.norm();
    double s = 0.0;
    for (int k = 0; k < v.size(); ++k) s += std::pow(std::abs(v[k]), p);
    return std::pow(s, 1.0 / p);
}

double conjugate_exponent(double p) {
    if (p == 1.0) return kInf;
    if (std::isinf(p)) return 1.0;
    return p / (p - 1.0);
}

// Bilinear action sum_k psi[k] v[k] (no conjugation).
Cx psi_apply(const CVec& psi, const CVec& v) { return psi.cwiseProduct(v).sum(); }

}  // namespace

NormSpec NormSpec::p_norm(double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("p-norm exponent must satisfy p >= 1");
    NormSpec s;
    s.kind = Kind::PNorm;
    s.p = p;
    return s;
}

NormSpec NormSpec::lourenco(CVec psi, CVec unit, const NormSpec& base) {
    if (base.kind == Kind::Lourenco)
        throw std::invalid_argument("lourenco base norm must be a p-norm or sup norm");
    if (psi.size() != unit.size()) throw DimensionMismatch("psi and e dimensions differ");
    const Cx pe = psi_apply(psi, unit);
    if (std::abs(pe) < 1e-14) throw InvalidDecomposition("lourenco norm requires psi(e) != 0");
    NormSpec s;
    s.kind = Kind::Lourenco;
    s.psi = psi / pe;  // normalize so psi(e) = 1
    s.unit = std::move(unit);
    s.base = std::make_shared<NormSpec>(base);
    const double unit_norm = vector_norm(base, s.unit);
    if (std::abs(unit_norm - 1.0) > 1e-9)
        throw std::invalid_argument("lourenco norm requires ||e|| = 1 in the base norm");
    return s;
}

bool NormSpec::operator==(const NormSpec& other) const {
    if (kind != other.kind) return false;
    switch (kind) {
        case Kind::Sup:
            return true;
        case Kind::PNorm:
            return p == other.p;
        case Kind::Lourenco:
            return psi == other.psi && unit == other.unit &&
                   (base && other.base ? *base == *other.base : base == other.base);
    }
    return false;
}

FiniteSpace::FiniteSpace(int dim, NormSpec norm) : dim(dim), norm(std::move(norm)) {
    if (dim < 1) throw std::invalid_argument("space dimension must be >= 1");
}

double vector_norm(const NormSpec& spec, const CVec& v) {
    switch (spec.kind) {
        case NormSpec::Kind::Sup:
            return v.size() ? v.cwiseAbs().maxCoeff() : 0.0;
        case NormSpec::Kind::PNorm:
            return p_vector_norm(spec.p, v);
        case NormSpec::Kind::Lourenco: {
            const Cx lam = psi_apply(spec.psi, v);
            const CVec x = v - lam * spec.unit;
            return std::abs(lam) + vector_norm(*spec.base, x);
        }
    }
    return 0.0;
}

namespace {

// Dual of the Lourenco norm restricted to ker psi equals the quotient norm
// min_t ||phi - t psi||_base*; every t yields an upper bound, so a coarse
// 2-real-variable descent suffices.
double lourenco_quotient_upper(const NormSpec& spec, const CVec& phi) {
    const NormSpec& base = *spec.base;
    auto value = [&](Cx t) { return dual_norm_upper(base, phi - t * spec.psi); };
    Cx t = 0.0;
    double best = value(t);
    // Seed with the stationary point of the p=2 case.
    const double psi_sq = spec.psi.squaredNorm();
    if (psi_sq > 0) {
        const Cx t2 = spec.psi.dot(phi) / psi_sq;
        const double v2 = value(t2);
        if (v2 < best) {
            best = v2;
            t = t2;
        }
    }
    double step = std::max(1.0, std::sqrt(std::abs(best)));
    for (int iter = 0; iter < 60; ++iter) {
        bool improved = false;
        for (const Cx dir : {Cx(1, 0), Cx(-1, 0), Cx(0, 1), Cx(0, -1)}) {
            const Cx cand = t + step * dir;
            const double v = value(cand);
            if (v < best - 1e-15) {
                best = v;
                t = cand;
                improved = true;
            }
        }
        if (!improved) {
            step *= 0.5;
            if (step < 1e-12) break;
        }
    }
    return best;
}

}  // namespace

double dual_norm_upper(const NormSpec& spec, const CVec& phi) {
    switch (spec.kind) {
        case NormSpec::Kind::Sup:
            return phi.cwiseAbs().sum();
        case NormSpec::Kind::PNorm:
            return p_vector_norm(conjugate_exponent(spec.p), phi);
        case NormSpec::Kind::Lourenco: {
            // phi = (phi(e) - phi_ker(e)) psi + phi_ker splits the action on
            // C e and on ker psi; dual norm = max of the two face values.
            const Cx phi_e = psi_apply(phi, spec.unit);
            return std::max(std::abs(phi_e), lourenco_quotient_upper(spec, phi));
        }
    }
    return 0.0;
}

namespace {

CVec p_norming_functional(double p, const CVec& a) {
    const int n = static_cast<int>(a.size());
    CVec phi = CVec::Zero(n);
    if (std::isinf(p)) {
        int kmax = 0;
        a.cwiseAbs().maxCoeff(&kmax);
        const double m = std::abs(a[kmax]);
        if (m > 0) phi[kmax] = std::conj(a[kmax]) / m;
        return phi;
    }
    if (p == 1.0) {
        for (int k = 0; k < n; ++k) {
            const double m = std::abs(a[k]);
            if (m > 0) phi[k] = std::conj(a[k]) / m;
        }
        return phi;
    }
    const double norm = p_vector_norm(p, a);
    if (norm == 0.0) return phi;
    for (int k = 0; k < n; ++k) {
        const double m = std::abs(a[k]);
        if (m > 0) phi[k] = std::conj(a[k]) * std::pow(m, p - 2.0) / std::pow(norm, p - 1.0);
    }
    return phi;
}

}  // namespace

CVec norming_functional(const NormSpec& spec, const CVec& a) {
    switch (spec.kind) {
        case NormSpec::Kind::Sup:
            return p_norming_functional(kInf, a);
        case NormSpec::Kind::PNorm:
            return p_norming_functional(spec.p, a);
        case NormSpec::Kind::Lourenco: {
            const Cx lam = psi_apply(spec.psi, a);
            const CVec x = a - lam * spec.unit;
            const Cx s = std::abs(lam) > 0 ? std::conj(lam) / std::abs(lam) : Cx(1, 0);
            const CVec phi_x = norming_functional(*spec.base, x);
            const Cx phi_x_e = psi_apply(phi_x, spec.unit);
            // phi(v) = s psi(v) + phi_x(v - psi(v) e).
            return (s - phi_x_e) * spec.psi + phi_x;
        }
    }
    return CVec::Zero(a.size());
}

CVec project_to_sphere(const NormSpec& spec, const CVec& v) {
    const double n = vector_norm(spec, v);
    if (n < 1e-300) {
        CVec e = CVec::Zero(v.size());
        e[0] = 1.0;
        return project_to_sphere(spec, e);
    }
    return v / n;
}

}  // namespace polyalg
