// SPDX-License-Identifier: Apache-2.0
#include "morse/params.hpp"

#include <string>

#include "morse/errors.hpp"

namespace morse {

ModelParams make_params(int n_levels, double omega) {
  if (n_levels < 2) {
    throw InvalidArgument("make_params: need at least 2 bound levels, got " +
                          std::to_string(n_levels));
  }
  if (!(omega > 0.0)) {
    throw InvalidArgument("make_params: omega must be positive");
  }
  const int k = 2 * n_levels + 1;
  return ModelParams{n_levels, 1.0 / static_cast<double>(k), omega, k};
}

double deformation_f2(int n, const ModelParams& params) {
  if (n < 0 || n > params.n_levels) {
    throw InvalidArgument("deformation_f2: level " + std::to_string(n) +
                          " outside [0, " + std::to_string(params.n_levels) + "]");
  }
  return 1.0 - params.chi_a * static_cast<double>(n);
}

double energy(int n, const ModelParams& params) {
  if (n < 0 || n >= params.n_levels) {
    throw InvalidArgument("energy: level " + std::to_string(n) + " outside [0, " +
                          std::to_string(params.n_levels - 1) + "]");
  }
  const double half = static_cast<double>(n) + 0.5;
  return params.omega * (half - params.chi_a * half * half - params.chi_a / 4.0);
}

}  // namespace morse
