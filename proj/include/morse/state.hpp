// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

namespace morse {

/// Normalized state on the truncated Fock space {|0>, ..., |N-1>}.
/// Builders always return unit-norm vectors (|norm - 1| <= 1e-12).
struct StateVector {
  Eigen::VectorXcd amps;

  int dim() const { return static_cast<int>(amps.size()); }
};

/// |norm(psi) - 1|.
double norm_error(const StateVector& psi);

/// |<a|b>|; states must share a dimension.
double overlap(const StateVector& a, const StateVector& b);

/// Basis state |n| in an N-dimensional space.
StateVector basis_state(int n_levels, int n);

/// Rotates the global phase so the first amplitude above `threshold`
/// in magnitude becomes real and positive.
void fix_phase_first_nonzero(StateVector& psi, double threshold = 1e-300);

/// Rotates the global phase so the largest-magnitude amplitude becomes
/// real and positive (ties resolved toward the lowest level).
void fix_phase_largest(StateVector& psi);

}  // namespace morse
