#pragma once

#include <complex>
#include <memory>

#include <Eigen/Dense>

namespace polyalg {

using Cx = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

class FiniteBanachAlgebra;
struct FiniteSpace;

using SpacePtr = std::shared_ptr<const FiniteSpace>;
using AlgebraPtr = std::shared_ptr<const FiniteBanachAlgebra>;

// Exact for arguments up to 18! (integers below 2^53).
double factorial(int n);
double binomial(int n, int k);

}  // namespace polyalg
