// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "morse/observables.hpp"
#include "morse/params.hpp"
#include "morse/state.hpp"

namespace morse {

/// One sample of a phase-space trajectory (time in units of 1/omega).
struct TrajectoryPoint {
  double t;
  double x_mean;
  double p_mean;
  double var_x;
  double var_p;
  double delta_xp;
  double norm_err;   ///< | ||psi|| - 1 |
};

/// Evolution under the diagonal deformed Hamiltonian:
/// amps[n] *= exp(-i E_n t). Exactly unitary; phases are computed from the
/// absolute time, so there is no step-to-step drift. Since k E_n / omega
/// differs from k E_0 / omega by an integer multiple of omega, every state
/// revives exactly at t = 2 pi k / omega.
StateVector evolve(const StateVector& psi0, double t, const ModelParams& params);

/// Samples means, dispersions and the normalized uncertainty product of
/// the evolved state on a strictly increasing time grid.
std::vector<TrajectoryPoint> trajectory(const StateVector& psi0,
                                        std::span<const double> t_grid,
                                        const ModelParams& params,
                                        const DenseOperator& x,
                                        const DenseOperator& p);

}  // namespace morse
