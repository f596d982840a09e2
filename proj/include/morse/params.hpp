// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace morse {

/// Parameters of a Morse-like deformed oscillator with N bound levels,
/// in natural units (hbar = mu = 1).
///
/// The anharmonicity is tied to the level count by the matching condition
/// chi_a = 1/(2N+1), so k * chi_a == 1 exactly.
struct ModelParams {
  int n_levels;   ///< N, number of bound states (workspace dimension)
  double chi_a;   ///< anharmonicity, 1/(2N+1)
  double omega;   ///< oscillator frequency
  int k;          ///< 2N+1
};

/// Builds model parameters for n_levels >= 2 and omega > 0.
ModelParams make_params(int n_levels, double omega = 1.0);

/// Squared deformation function f^2(n) = 1 - chi_a * n, for 0 <= n <= N.
/// Strictly positive on that range (minimum 1/(2N+1) is not reached until
/// n = 2N).
double deformation_f2(int n, const ModelParams& params);

/// Bound-state energy E_n = omega * [n + 1/2 - chi_a (n + 1/2)^2 - chi_a/4],
/// for 0 <= n <= N-1. The spectrum is monotone with gaps compressing
/// linearly in n.
double energy(int n, const ModelParams& params);

}  // namespace morse
