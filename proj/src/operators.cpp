// SPDX-License-Identifier: Apache-2.0
#include "morse/operators.hpp"

#include <cmath>

#include "morse/errors.hpp"

namespace morse {

DenseOperator lowering_matrix(int dim, double chi_a) {
  if (dim < 1) {
    throw InvalidArgument("lowering_matrix: dimension must be positive");
  }
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) {
    m(n - 1, n) = std::sqrt(n * (1.0 - chi_a * n));
  }
  return DenseOperator{std::move(m), false};
}

std::pair<DenseOperator, DenseOperator> ladder_matrices(const ModelParams& params) {
  DenseOperator a = lowering_matrix(params.n_levels, params.chi_a);
  DenseOperator adag{a.entries.adjoint(), false};
  return {std::move(a), std::move(adag)};
}

Eigen::VectorXcd apply(const DenseOperator& op, const StateVector& psi) {
  if (op.dim() != psi.dim()) {
    throw InvalidArgument("apply: operator/state dimension mismatch");
  }
  return op.entries * psi.amps;
}

std::complex<double> expectation(const DenseOperator& op, const StateVector& psi) {
  if (op.dim() != psi.dim()) {
    throw InvalidArgument("expectation: operator/state dimension mismatch");
  }
  return psi.amps.dot(op.entries * psi.amps);
}

double hermiticity_deviation(const Eigen::MatrixXcd& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace morse
