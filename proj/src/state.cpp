// SPDX-License-Identifier: Apache-2.0
#include "morse/state.hpp"

#include <cmath>
#include <string>

#include "morse/errors.hpp"

namespace morse {

double norm_error(const StateVector& psi) { return std::abs(psi.amps.norm() - 1.0); }

double overlap(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) {
    throw InvalidArgument("overlap: dimension mismatch");
  }
  return std::abs(a.amps.dot(b.amps));
}

StateVector basis_state(int n_levels, int n) {
  if (n < 0 || n >= n_levels) {
    throw InvalidArgument("basis_state: level " + std::to_string(n) + " outside space");
  }
  StateVector psi{Eigen::VectorXcd::Zero(n_levels)};
  psi.amps[n] = 1.0;
  return psi;
}

void fix_phase_first_nonzero(StateVector& psi, double threshold) {
  for (int n = 0; n < psi.dim(); ++n) {
    const double mag = std::abs(psi.amps[n]);
    if (mag > threshold) {
      psi.amps *= std::conj(psi.amps[n]) / mag;
      return;
    }
  }
}

void fix_phase_largest(StateVector& psi) {
  int best = 0;
  double best_mag = 0.0;
  for (int n = 0; n < psi.dim(); ++n) {
    const double mag = std::abs(psi.amps[n]);
    if (mag > best_mag) {
      best_mag = mag;
      best = n;
    }
  }
  if (best_mag > 0.0) {
    psi.amps *= std::conj(psi.amps[best]) / best_mag;
  }
}

}  // namespace morse
