#include "polyalg/products.hpp"

#include <cmath>

#include "polyalg/exceptions.hpp"

namespace polyalg {

PowerSumRep product_power_sums(const PowerSumRep& p, const PowerSumRep& q) {
    if (!same_space(p.source(), q.source()) || !same_algebra(p.target(), q.target()))
        throw DimensionMismatch("product factors must share source and target");
    const int m = p.degree(), n = q.degree();
    if (m == 0 && n == 0)
        return PowerSumRep::constant(p.target()->mul(p.constant_value(), q.constant_value()),
                                     p.source(), p.target());
    if (m == 0) return multiply_by_constant(q, p.constant_value());
    if (n == 0) return multiply_by_constant(p, q.constant_value());

    const int total = m + n;
    const double scale = 1.0 / (std::pow(2.0, total) * factorial(total));
    std::vector<PowerSumTerm> terms;
    terms.reserve(p.terms().size() * q.terms().size() << total);
    for (const PowerSumTerm& s : p.terms()) {
        for (const PowerSumTerm& t : q.terms()) {
            for (unsigned bits = 0; bits < (1u << total); ++bits) {
                double sign = 1.0;
                int alpha = 0, beta = 0;
                for (int l = 0; l < total; ++l) {
                    const int eps = (bits >> l) & 1u ? -1 : 1;
                    sign *= eps;
                    (l < m ? alpha : beta) += eps;
                }
                CMat op = static_cast<double>(alpha) * s.op.matrix +
                          static_cast<double>(beta) * t.op.matrix;
                terms.push_back(PowerSumTerm{s.weight * t.weight * sign * scale,
                                             LinearOperator{std::move(op), p.source(), p.target()}});
            }
        }
    }
    return PowerSumRep::homogeneous(total, std::move(terms), p.source(), p.target());
}

std::vector<CVec> roots_of_unity_decomposition(const FiniteBanachAlgebra& algebra, const CVec& b,
                                               int m) {
    if (m < 2) throw std::invalid_argument("decomposition needs m >= 2 (fails identically at m = 1)");
    std::vector<CVec> parts;
    parts.reserve(m);
    const double radius = std::pow(static_cast<double>(m) * m, -1.0 / m);
    for (int k = 1; k <= m; ++k) {
        const Cx outer = std::polar(radius, 2.0 * M_PI * k / (static_cast<double>(m) * m));
        const Cx inner = std::polar(1.0, 2.0 * M_PI * k / m);
        parts.push_back(outer * (b + inner * algebra.identity()));
    }
    return parts;
}

PowerSumRep multiply_by_constant(const PowerSumRep& p, const CVec& b) {
    const FiniteBanachAlgebra& algebra = *p.target();
    if (b.size() != algebra.dim()) throw DimensionMismatch("constant has wrong length");
    const int m = p.degree();
    if (m == 0) return PowerSumRep::constant(algebra.mul(p.constant_value(), b), p.source(), p.target());

    if (m == 1) {
        const CMat mb = algebra.multiplication_matrix(b);
        std::vector<PowerSumTerm> terms;
        terms.reserve(p.terms().size());
        for (const PowerSumTerm& t : p.terms())
            terms.push_back(PowerSumTerm{t.weight, LinearOperator{mb * t.op.matrix, p.source(), p.target()}});
        return PowerSumRep::homogeneous(1, std::move(terms), p.source(), p.target());
    }

    const std::vector<CVec> parts = roots_of_unity_decomposition(algebra, b, m);
    CVec reassembled = CVec::Zero(algebra.dim());
    for (const CVec& bk : parts) reassembled += algebra.power(bk, m);
    const double scale = std::max(1.0, algebra.element_norm(b));
    if (algebra.element_norm(reassembled - b) > 1e-10 * scale)
        throw ComputeError("roots-of-unity decomposition failed to reproduce the constant");

    std::vector<PowerSumTerm> terms;
    terms.reserve(p.terms().size() * m);
    for (const CVec& bk : parts) {
        const CMat mbk = algebra.multiplication_matrix(bk);
        for (const PowerSumTerm& t : p.terms())
            terms.push_back(PowerSumTerm{t.weight, LinearOperator{mbk * t.op.matrix, p.source(), p.target()}});
    }
    return PowerSumRep::homogeneous(m, std::move(terms), p.source(), p.target());
}

PowerSumRep coalesce_terms(const PowerSumRep& p, double rel_tol) {
    if (p.degree() == 0) return p;
    std::vector<PowerSumTerm> merged;
    for (const PowerSumTerm& t : p.terms()) {
        const double tnorm = t.op.matrix.cwiseAbs().maxCoeff();
        if (tnorm == 0.0 || t.weight == Cx(0, 0)) continue;
        bool absorbed = false;
        for (PowerSumTerm& u : merged) {
            // Proportional operators: find c with t.op = c * u.op.
            int r = 0, c = 0;
            u.op.matrix.cwiseAbs().maxCoeff(&r, &c);
            const Cx ratio = t.op.matrix(r, c) / u.op.matrix(r, c);
            if ((t.op.matrix - ratio * u.op.matrix).cwiseAbs().maxCoeff() <= rel_tol * tnorm) {
                u.weight += t.weight * std::pow(ratio, p.degree());
                absorbed = true;
                break;
            }
        }
        if (!absorbed) merged.push_back(t);
    }
    std::erase_if(merged, [](const PowerSumTerm& t) { return t.weight == Cx(0, 0); });
    if (merged.empty()) {
        // All terms cancelled: keep a single zero term so degree is preserved.
        merged.push_back(PowerSumTerm{
            Cx(0, 0), LinearOperator{CMat::Zero(p.target()->dim(), p.source()->dim), p.source(), p.target()}});
    }
    return PowerSumRep::homogeneous(p.degree(), std::move(merged), p.source(), p.target());
}

}  // namespace polyalg
