#include "polyalg/instance_gen.hpp"

#include <cmath>

namespace polyalg::gen {

NormSpec random_simple_norm(Rng& rng) {
    switch (rng.uniform_int(5)) {
        case 0: return NormSpec::p_norm(1.0);
        case 1: return NormSpec::p_norm(2.0);
        case 2: return NormSpec::p_norm(3.0);
        case 3: return NormSpec::p_norm(std::numeric_limits<double>::infinity());
        default: return NormSpec::sup();
    }
}

SpacePtr random_space(Rng& rng, int max_dim) {
    const int dim = 1 + static_cast<int>(rng.uniform_int(max_dim));
    return std::make_shared<FiniteSpace>(dim, random_simple_norm(rng));
}

AlgebraPtr random_pointwise_algebra(Rng& rng, int max_dim) {
    const int dim = 1 + static_cast<int>(rng.uniform_int(max_dim));
    return make_pointwise_algebra(dim, random_simple_norm(rng));
}

AlgebraPtr random_algebra(Rng& rng, int max_dim) {
    if (max_dim >= 2 && rng.uniform() < 0.25) {
        const int dim = 2 + static_cast<int>(rng.uniform_int(max_dim - 1));
        const NormSpec base = rng.uniform() < 0.5 ? NormSpec::sup() : NormSpec::p_norm(2.0);
        const FiniteSpace space(dim, base);
        CVec e = rng.complex_normal_vec(dim);
        e /= vector_norm(base, e);
        CVec psi = rng.complex_normal_vec(dim);
        while (std::abs(psi.cwiseProduct(e).sum()) < 0.2) psi += e.conjugate();  // keep psi(e) away from 0
        return make_lourenco_algebra(space, psi, e);
    }
    return random_pointwise_algebra(rng, max_dim);
}

std::pair<SpacePtr, AlgebraPtr> random_exact_norm_pair(Rng& rng, int max_dim_e, int max_dim_a) {
    const int dim_e = 1 + static_cast<int>(rng.uniform_int(max_dim_e));
    const int dim_a = 1 + static_cast<int>(rng.uniform_int(max_dim_a));
    switch (rng.uniform_int(4)) {
        case 0:  // scalar target
            return {std::make_shared<FiniteSpace>(dim_e, random_simple_norm(rng)),
                    make_pointwise_algebra(1, NormSpec::sup())};
        case 1:  // sup target
            return {std::make_shared<FiniteSpace>(dim_e, random_simple_norm(rng)),
                    make_pointwise_algebra(dim_a, NormSpec::sup())};
        case 2:  // 2 -> 2
            return {std::make_shared<FiniteSpace>(dim_e, NormSpec::p_norm(2.0)),
                    make_pointwise_algebra(dim_a, NormSpec::p_norm(2.0))};
        default:  // source l1
            return {std::make_shared<FiniteSpace>(dim_e, NormSpec::p_norm(1.0)),
                    make_pointwise_algebra(dim_a, random_simple_norm(rng))};
    }
}

PowerSumRep random_power_sum(Rng& rng, int degree, int terms, SpacePtr space, AlgebraPtr algebra) {
    if (degree == 0) {
        return PowerSumRep::constant(rng.complex_normal_vec(algebra->dim()), std::move(space),
                                     std::move(algebra));
    }
    std::vector<PowerSumTerm> list;
    list.reserve(terms);
    const double scale = 1.0 / std::sqrt(static_cast<double>(space->dim * algebra->dim()));
    for (int t = 0; t < terms; ++t) {
        CMat m(algebra->dim(), space->dim);
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c) m(r, c) = scale * rng.complex_normal();
        const Cx weight = Cx(0.5, 0) + 0.5 * rng.complex_normal();
        list.push_back(PowerSumTerm{weight, LinearOperator{std::move(m), space, algebra}});
    }
    return PowerSumRep::homogeneous(degree, std::move(list), std::move(space), std::move(algebra));
}

PolynomialSum random_polynomial(Rng& rng, int max_degree, int max_terms, SpacePtr space,
                                AlgebraPtr algebra) {
    PolynomialSum p(space, algebra);
    for (int deg = 0; deg <= max_degree; ++deg) {
        if (deg < max_degree && rng.uniform() < 0.5) continue;  // keep the top degree
        const int terms = deg == 0 ? 1 : 1 + static_cast<int>(rng.uniform_int(max_terms));
        p.add_part(random_power_sum(rng, deg, terms, space, algebra));
    }
    return p;
}

CVec random_point(Rng& rng, const FiniteSpace& space, double radius) {
    CVec x = rng.complex_normal_vec(space.dim);
    const double n = vector_norm(space.norm, x);
    if (n < 1e-12) return CVec::Zero(space.dim);
    return x * (radius * rng.uniform() / n);
}

CompactSet random_compact(Rng& rng, SpacePtr space, int n_points, double radius) {
    std::vector<CVec> points;
    points.reserve(n_points);
    for (int k = 0; k < n_points; ++k) points.push_back(random_point(rng, *space, radius));
    return CompactSet(std::move(points), std::move(space));
}

TensorElement random_tensor_element(Rng& rng, int pairs, int max_degree, SpacePtr space,
                                    AlgebraPtr algebra) {
    TensorElement t(space, algebra);
    for (int k = 0; k < pairs; ++k) {
        PolynomialSum f =
            random_polynomial(rng, 1 + static_cast<int>(rng.uniform_int(max_degree)), 2, space,
                              scalar_algebra());
        t.add_pair(std::move(f), rng.complex_normal_vec(algebra->dim()));
    }
    return t;
}

CompactSet unit_circle(int n_points) {
    const SpacePtr space = std::make_shared<FiniteSpace>(1, NormSpec::sup());
    std::vector<CVec> points;
    points.reserve(n_points);
    for (int k = 0; k < n_points; ++k) {
        CVec z(1);
        z[0] = std::polar(1.0, 2.0 * M_PI * k / n_points);
        points.push_back(std::move(z));
    }
    return CompactSet(std::move(points), space);
}

}  // namespace polyalg::gen
