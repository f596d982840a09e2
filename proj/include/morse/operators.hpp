// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <utility>

#include <Eigen/Dense>

#include "morse/params.hpp"
#include "morse/state.hpp"

namespace morse {

/// Dense complex operator on the truncated space.
struct DenseOperator {
  Eigen::MatrixXcd entries;
  bool hermitian = false;

  int dim() const { return static_cast<int>(entries.rows()); }
};

/// Lowering matrix on `dim` levels for the deformation family
/// f^2(n) = 1 - chi_a * n:  M[n-1, n] = sqrt(n (1 - chi_a n)).
/// chi_a == 0 gives the harmonic ladder sqrt(n).
DenseOperator lowering_matrix(int dim, double chi_a);

/// Deformed annihilation/creation pair (A, A^dagger) on the N-level
/// workspace. The raising action out of the top level is truncated to
/// zero; both operators are flagged non-hermitian.
std::pair<DenseOperator, DenseOperator> ladder_matrices(const ModelParams& params);

/// Matrix-vector product; the result is generally unnormalized.
Eigen::VectorXcd apply(const DenseOperator& op, const StateVector& psi);

/// <psi| op |psi>.
std::complex<double> expectation(const DenseOperator& op, const StateVector& psi);

/// max_ij |M - M^dagger|.
double hermiticity_deviation(const Eigen::MatrixXcd& m);

}  // namespace morse
