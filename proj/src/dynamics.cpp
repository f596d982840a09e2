// SPDX-License-Identifier: Apache-2.0
#include "morse/dynamics.hpp"

#include <cmath>
#include <complex>

#include "morse/errors.hpp"

namespace morse {

StateVector evolve(const StateVector& psi0, double t, const ModelParams& params) {
  if (psi0.dim() != params.n_levels) {
    throw InvalidArgument("evolve: state dimension does not match the model");
  }
  StateVector psi{Eigen::VectorXcd(psi0.dim())};
  for (int n = 0; n < psi0.dim(); ++n) {
    psi.amps[n] = std::polar(1.0, -energy(n, params) * t) * psi0.amps[n];
  }
  return psi;
}

std::vector<TrajectoryPoint> trajectory(const StateVector& psi0,
                                        std::span<const double> t_grid,
                                        const ModelParams& params,
                                        const DenseOperator& x,
                                        const DenseOperator& p) {
  if (t_grid.empty()) {
    throw InvalidArgument("trajectory: time grid is empty");
  }
  for (std::size_t i = 1; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > t_grid[i - 1])) {
      throw InvalidArgument("trajectory: time grid must be strictly increasing");
    }
  }

  std::vector<TrajectoryPoint> points;
  points.reserve(t_grid.size());
  for (const double t : t_grid) {
    const StateVector psi = evolve(psi0, t, params);
    const auto [var_x, var_p] = dispersions(psi, x, p);
    points.push_back(TrajectoryPoint{
        t,
        expectation(x, psi).real(),
        expectation(p, psi).real(),
        var_x,
        var_p,
        uncertainty_product(psi, x, p),
        norm_error(psi),
    });
  }
  return points;
}

}  // namespace morse
