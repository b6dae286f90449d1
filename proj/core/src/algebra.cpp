#include "polyalg/algebra.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "polyalg/exceptions.hpp"
#include "polyalg/rng.hpp"
#include "polyalg/search.hpp"

namespace polyalg {

namespace {

Cx bilinear(const CVec& phi, const CVec& v) { return phi.cwiseProduct(v).sum(); }

bool tensor_is_diagonal(const std::vector<CMat>& ops) {
    const int d = static_cast<int>(ops.size());
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                const Cx expected = (i == j && j == k) ? Cx(1, 0) : Cx(0, 0);
                if (ops[i](k, j) != expected) return false;
            }
    return true;
}

}  // namespace

FiniteBanachAlgebra::FiniteBanachAlgebra(std::vector<CMat> basis_mult_ops, CVec identity,
                                         NormSpec norm, double submult_constant)
    : dim_(static_cast<int>(basis_mult_ops.size())),
      mult_ops_(std::move(basis_mult_ops)),
      identity_(std::move(identity)),
      norm_(std::move(norm)),
      submult_constant_(submult_constant) {
    if (dim_ < 1) throw std::invalid_argument("algebra dimension must be >= 1");
    for (const CMat& m : mult_ops_)
        if (m.rows() != dim_ || m.cols() != dim_)
            throw DimensionMismatch("structure tensor slice has wrong shape");
    if (identity_.size() != dim_) throw DimensionMismatch("identity vector has wrong length");

    // Commutativity must hold exactly on the stored tensor.
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < i; ++j)
            for (int k = 0; k < dim_; ++k)
                if (mult_ops_[i](k, j) != mult_ops_[j](k, i))
                    throw std::invalid_argument("structure tensor is not commutative");

    constexpr double tol = 1e-12;
    for (int i = 0; i < dim_; ++i) {
        CVec ei = CVec::Zero(dim_);
        ei[i] = 1.0;
        if ((mul(identity_, ei) - ei).cwiseAbs().maxCoeff() > tol)
            throw std::invalid_argument("identity vector fails the unit law");
    }
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int l = 0; l < dim_; ++l) {
                CVec ei = CVec::Zero(dim_), ej = CVec::Zero(dim_), el = CVec::Zero(dim_);
                ei[i] = 1.0;
                ej[j] = 1.0;
                el[l] = 1.0;
                const CVec lhs = mul(mul(ei, ej), el);
                const CVec rhs = mul(ei, mul(ej, el));
                if ((lhs - rhs).cwiseAbs().maxCoeff() > tol)
                    throw std::invalid_argument("structure tensor is not associative");
            }
    diagonal_ = tensor_is_diagonal(mult_ops_);
}

FiniteBanachAlgebra FiniteBanachAlgebra::pointwise(int dim, NormSpec norm) {
    if (dim < 1) throw std::invalid_argument("pointwise algebra requires dim >= 1");
    if (norm.kind == NormSpec::Kind::Lourenco)
        throw std::invalid_argument("pointwise algebra norm must be a p-norm or sup norm");
    std::vector<CMat> ops(dim, CMat::Zero(dim, dim));
    for (int i = 0; i < dim; ++i) ops[i](i, i) = 1.0;
    return FiniteBanachAlgebra(std::move(ops), CVec::Ones(dim), std::move(norm), 1.0);
}

FiniteBanachAlgebra FiniteBanachAlgebra::lourenco(const FiniteSpace& space, const CVec& psi,
                                                  const CVec& e) {
    if (psi.size() != space.dim || e.size() != space.dim)
        throw DimensionMismatch("psi/e dimension does not match the space");
    const NormSpec norm = NormSpec::lourenco(psi, e, space.norm);  // checks psi(e) != 0, ||e|| = 1
    const CVec& psi_n = norm.psi;                                  // normalized: psi_n(e) = 1
    const int d = space.dim;

    // ab = psi(b) x + psi(a) y + psi(a) psi(b) e with a = x + psi(a) e.
    auto product = [&](const CVec& a, const CVec& b) {
        const Cx pa = bilinear(psi_n, a);
        const Cx pb = bilinear(psi_n, b);
        const CVec x = a - pa * e;
        const CVec y = b - pb * e;
        return CVec(pb * x + pa * y + pa * pb * e);
    };

    std::vector<CMat> ops(d, CMat::Zero(d, d));
    for (int i = 0; i < d; ++i) {
        CVec ei = CVec::Zero(d);
        ei[i] = 1.0;
        for (int j = 0; j < d; ++j) {
            CVec ej = CVec::Zero(d);
            ej[j] = 1.0;
            ops[i].col(j) = product(ei, ej);
        }
    }
    return FiniteBanachAlgebra(std::move(ops), e, norm, 1.0);
}

CVec FiniteBanachAlgebra::mul(const CVec& a, const CVec& b) const {
    if (a.size() != dim_ || b.size() != dim_)
        throw DimensionMismatch("element length does not match algebra dimension");
    CVec result = CVec::Zero(dim_);
    for (int i = 0; i < dim_; ++i)
        if (a[i] != Cx(0, 0)) result.noalias() += a[i] * (mult_ops_[i] * b);
    return result;
}

CVec FiniteBanachAlgebra::power(const CVec& a, int n) const {
    if (n < 0) throw std::invalid_argument("negative algebra power");
    if (n == 0) return identity_;
    CVec r = a;
    for (int k = 1; k < n; ++k) r = mul(r, a);
    return r;
}

double FiniteBanachAlgebra::element_norm(const CVec& a) const {
    if (a.size() != dim_) throw DimensionMismatch("element length does not match algebra dimension");
    return vector_norm(norm_, a);
}

CMat FiniteBanachAlgebra::multiplication_matrix(const CVec& a) const {
    CMat m = CMat::Zero(dim_, dim_);
    for (int i = 0; i < dim_; ++i) m += a[i] * mult_ops_[i];
    return m;
}

AlgebraPtr make_pointwise_algebra(int dim, const NormSpec& norm) {
    return std::make_shared<FiniteBanachAlgebra>(FiniteBanachAlgebra::pointwise(dim, norm));
}

AlgebraPtr make_lourenco_algebra(const FiniteSpace& space, const CVec& psi, const CVec& e) {
    return std::make_shared<FiniteBanachAlgebra>(FiniteBanachAlgebra::lourenco(space, psi, e));
}

AlgebraPtr scalar_algebra() {
    static const AlgebraPtr instance = make_pointwise_algebra(1, NormSpec::sup());
    return instance;
}

CharacterValidation validate_character(const FiniteBanachAlgebra& algebra, const Character& chi) {
    const int d = algebra.dim();
    if (chi.functional.size() != d)
        throw DimensionMismatch("character length does not match algebra dimension");
    CharacterValidation report;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            // phi(e_i e_j) from the structure tensor column.
            const Cx lhs = bilinear(chi.functional, algebra.mult_op(i).col(j));
            const Cx rhs = chi.functional[i] * chi.functional[j];
            report.mult_residual = std::max(report.mult_residual, std::abs(lhs - rhs));
        }
    report.unit_residual = std::abs(chi.eval(algebra.identity()) - Cx(1, 0));
    return report;
}

namespace {

bool character_less(const Character& a, const Character& b) {
    for (int k = 0; k < a.functional.size(); ++k) {
        const Cx x = a.functional[k], y = b.functional[k];
        if (x.real() != y.real()) return x.real() < y.real();
        if (x.imag() != y.imag()) return x.imag() < y.imag();
    }
    return false;
}

}  // namespace

std::vector<Character> enumerate_characters(const FiniteBanachAlgebra& algebra) {
    const int d = algebra.dim();

    if (algebra.is_diagonal()) {
        // Pointwise product: exactly the coordinate evaluations.
        std::vector<Character> chars;
        chars.reserve(d);
        for (int k = 0; k < d; ++k) {
            CVec phi = CVec::Zero(d);
            phi[k] = 1.0;
            chars.push_back(Character{phi});
        }
        std::sort(chars.begin(), chars.end(), character_less);
        return chars;
    }

    // Trace form G_ij = tr(M_i M_j); its kernel is the radical (char 0),
    // and characters factor through the semisimple quotient.
    CMat gram(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j <= i; ++j) {
            const Cx t = (algebra.mult_op(i) * algebra.mult_op(j)).trace();
            gram(i, j) = t;
            gram(j, i) = t;
        }
    Eigen::JacobiSVD<CMat> svd(gram, Eigen::ComputeFullV);
    const auto& sigma = svd.singularValues();
    const double cutoff = sigma[0] * 1e-10;
    int rank = 0;
    while (rank < d && sigma[rank] > cutoff) ++rank;
    if (rank == 0) throw UnsupportedAlgebra("trace form vanished; no semisimple part found");

    const CMat basis = svd.matrixV();  // cols 0..rank-1 span a complement of the radical

    // Quotient multiplication operators in the complement coordinates.
    std::vector<CMat> quotient_ops(rank, CMat::Zero(rank, rank));
    for (int a = 0; a < rank; ++a)
        for (int b = 0; b < rank; ++b) {
            const CVec z = algebra.mul(basis.col(a), basis.col(b));
            quotient_ops[a].col(b) = (basis.adjoint() * z).head(rank);
        }

    for (int attempt = 0; attempt < 8; ++attempt) {
        Rng rng(derive_seed(0xA16EB7A5u, static_cast<std::uint64_t>(attempt)));
        CMat combo = CMat::Zero(rank, rank);
        for (int a = 0; a < rank; ++a) combo += rng.complex_normal() * quotient_ops[a];

        Eigen::ComplexEigenSolver<CMat> es(combo);
        if (es.info() != Eigen::Success) continue;
        const CMat vectors = es.eigenvectors();
        Eigen::FullPivLU<CMat> lu(vectors);
        if (!lu.isInvertible()) continue;
        const CMat inverse = lu.inverse();

        // The eigenbasis must diagonalize every quotient operator at once.
        bool simultaneous = true;
        std::vector<CVec> diagonals(rank);
        for (int a = 0; a < rank && simultaneous; ++a) {
            const CMat dmat = inverse * quotient_ops[a] * vectors;
            const double scale = std::max(1.0, dmat.cwiseAbs().maxCoeff());
            for (int r = 0; r < rank && simultaneous; ++r)
                for (int c = 0; c < rank; ++c)
                    if (r != c && std::abs(dmat(r, c)) > 1e-9 * scale) {
                        simultaneous = false;
                        break;
                    }
            diagonals[a] = dmat.diagonal();
        }
        if (!simultaneous) continue;

        // Lift: phi(e_k) = sum_a (V^* e_k)_a phi_ss(q_a).
        std::vector<Character> chars;
        bool all_valid = true;
        for (int j = 0; j < rank; ++j) {
            CVec phi = CVec::Zero(d);
            for (int k = 0; k < d; ++k)
                for (int a = 0; a < rank; ++a)
                    phi[k] += std::conj(basis(k, a)) * diagonals[a][j];
            Character chi{phi};
            if (!validate_character(algebra, chi).ok(1e-10)) {
                all_valid = false;
                break;
            }
            chars.push_back(std::move(chi));
        }
        if (!all_valid) continue;

        std::sort(chars.begin(), chars.end(), character_less);
        // Pairwise distinct, or the eigenbasis lied about the quotient.
        bool distinct = true;
        for (std::size_t i = 1; i < chars.size(); ++i)
            if ((chars[i].functional - chars[i - 1].functional).cwiseAbs().maxCoeff() < 1e-8)
                distinct = false;
        if (!distinct) continue;
        return chars;
    }
    throw UnsupportedAlgebra(
        "multiplication family admits no simultaneous eigenbasis at working precision");
}

NormEstimate dual_norm_sup(const FiniteBanachAlgebra& algebra, const CVec& a,
                           const SearchBudget& budget) {
    const int d = algebra.dim();
    if (a.size() != d) throw DimensionMismatch("element length does not match algebra dimension");
    const NormSpec& norm = algebra.norm();

    SearchProblem problem;
    problem.stream = 0x5D0A1u;
    problem.sample = [d](Rng& rng) { return rng.complex_normal_vec(d); };
    problem.project = [&norm](const CVec& phi) {
        const double upper = dual_norm_upper(norm, phi);
        if (upper < 1e-300) return phi;
        return CVec(phi / upper);
    };
    problem.objective = [&a](const CVec& phi) { return std::abs(bilinear(phi, a)); };
    problem.smart_starts.push_back(norming_functional(norm, a));
    for (int k = 0; k < d; ++k) {
        CVec ek = CVec::Zero(d);
        ek[k] = 1.0;
        problem.smart_starts.push_back(ek);
    }

    auto [value, phi] = seeded_max_search(problem, budget);
    return NormEstimate{value, Witness{"functional", {phi}}, budget};
}

double measure_submult_constant(const FiniteBanachAlgebra& algebra, int samples,
                                std::uint64_t seed) {
    Rng rng(seed);
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        const CVec a = rng.complex_normal_vec(algebra.dim());
        const CVec b = rng.complex_normal_vec(algebra.dim());
        const double na = algebra.element_norm(a), nb = algebra.element_norm(b);
        if (na < 1e-12 || nb < 1e-12) continue;
        worst = std::max(worst, algebra.element_norm(algebra.mul(a, b)) / (na * nb));
    }
    return worst;
}

}  // namespace polyalg
