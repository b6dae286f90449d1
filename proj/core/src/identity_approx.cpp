#include "polyalg/identity_approx.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "polyalg/exceptions.hpp"
#include "polyalg/rng.hpp"
#include "polyalg/search.hpp"

namespace polyalg {

IdentityApproximation::IdentityApproximation(std::vector<ApproxPair> pairs, const CompactSet& K,
                                             SpacePtr space)
    : pairs_(std::move(pairs)), space_(std::move(space)) {
    for (const ApproxPair& p : pairs_)
        if (p.a.size() != space_->dim) throw DimensionMismatch("approximation vector has wrong length");
    epsilon_ = 0.0;
    for (const CVec& x : K.points())
        epsilon_ = std::max(epsilon_, vector_norm(space_->norm, x - combine(x)));
}

CVec IdentityApproximation::combine(const CVec& x) const {
    CVec acc = CVec::Zero(space_->dim);
    for (const ApproxPair& p : pairs_) acc += p.f.eval_scalar(x) * p.a;
    return acc;
}

namespace {

// Orthonormal columns from a raw parameter matrix.
CMat orthonormalize(const CMat& raw) {
    Eigen::HouseholderQR<CMat> qr(raw);
    CMat q = qr.householderQ() * CMat::Identity(raw.rows(), raw.cols());
    return q;
}

std::vector<ApproxPair> projection_pairs(const CMat& basis, const SpacePtr& space) {
    std::vector<ApproxPair> pairs;
    for (int i = 0; i < basis.cols(); ++i) {
        // f_i(x) = <u_i, x> as a coefficient row, a_i = u_i.
        pairs.push_back(ApproxPair{scalar_functional_poly(basis.col(i).conjugate(), space),
                                   basis.col(i)});
    }
    return pairs;
}

double max_residual(const CMat& basis, const CompactSet& K, const NormSpec& norm) {
    double worst = 0.0;
    for (const CVec& x : K.points()) {
        const CVec proj = basis * (basis.adjoint() * x);
        worst = std::max(worst, vector_norm(norm, x - proj));
    }
    return worst;
}

}  // namespace

IdentityApproximation finite_rank_identity_approx(const FiniteSpace& space, const CompactSet& K,
                                                  std::optional<int> rank_cap,
                                                  const SearchBudget& budget) {
    const int d = space.dim;
    const SpacePtr space_ptr = std::make_shared<FiniteSpace>(space);
    const int rank = rank_cap.value_or(d);
    if (rank < 1) throw std::invalid_argument("rank cap must be >= 1");

    if (rank >= d) {
        // Coordinate decomposition: x = sum x_i e_i, epsilon = 0.
        std::vector<ApproxPair> pairs;
        for (int i = 0; i < d; ++i) {
            CVec row = CVec::Zero(d), e = CVec::Zero(d);
            row[i] = 1.0;
            e[i] = 1.0;
            pairs.push_back(ApproxPair{scalar_functional_poly(row, space_ptr), std::move(e)});
        }
        return IdentityApproximation(std::move(pairs), K, space_ptr);
    }

    // SVD of the point matrix seeds the projection; minimax refinement then
    // descends on the exact residual over K.
    CMat cloud(d, static_cast<int>(K.points().size()));
    for (std::size_t j = 0; j < K.points().size(); ++j) cloud.col(static_cast<int>(j)) = K.points()[j];
    Eigen::JacobiSVD<CMat> svd(cloud, Eigen::ComputeFullU);
    const CMat init = svd.matrixU().leftCols(rank);

    SearchProblem problem;
    problem.stream = 0x1DA99Fu;
    problem.sample = [d, rank](Rng& rng) { return rng.complex_normal_vec(d * rank); };
    problem.project = [](const CVec& flat) { return flat; };
    problem.objective = [&](const CVec& flat) {
        const CMat basis = orthonormalize(Eigen::Map<const CMat>(flat.data(), d, rank));
        return -max_residual(basis, K, space.norm);  // maximize the negative residual
    };
    problem.smart_starts.push_back(Eigen::Map<const CVec>(init.data(), d * rank));

    auto [neg_residual, flat] = seeded_max_search(problem, budget);
    const CMat basis = orthonormalize(Eigen::Map<const CMat>(flat.data(), d, rank));
    return IdentityApproximation(projection_pairs(basis, space_ptr), K, space_ptr);
}

}  // namespace polyalg
