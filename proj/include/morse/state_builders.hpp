// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>

#include "morse/params.hpp"
#include "morse/state.hpp"

namespace morse {

enum class LoqcsMethod { closed_form, recursion, eigen_oracle };

/// Ladder-operator quasi-coherent state: approximate eigenstate of
/// A + gamma * A^dagger with real eigenvalue alpha.
struct LoqcsSpec {
  double alpha = 0.0;   ///< state size (real)
  double gamma = 0.0;   ///< squeeze parameter, >= 0
  LoqcsMethod method = LoqcsMethod::closed_form;
};

/// Deformed photon-subtracted coherent state: m-fold application of the
/// deformed annihilation operator to a displacement-operator coherent
/// state with zeta = exp(i phi) tan(alpha_mag * chi_a).
struct DpscsSpec {
  double alpha_mag = 0.0;   ///< |alpha| >= 0
  double phi = 0.0;         ///< displacement phase (radians)
  int subtracted = 0;       ///< m, number of quanta removed, 0 <= m <= N-1
};

/// Per-build diagnostics. The regime warning fires when the top-level
/// occupation indicates the state is leaving the low-lying region where
/// the truncated construction is trustworthy.
struct BuildDiagnostics {
  double top_level_leakage = 0.0;   ///< p_{N-1}
  bool regime_warning = false;      ///< p_{N-1} > 1e-2
};

/// Displacement parameter derived from a DPSCS spec.
std::complex<double> dpscs_zeta(const DpscsSpec& spec, const ModelParams& params);

/// Lattice index n = N + [alpha / (2 sqrt(chi_a gamma))], rounding halves
/// away from zero. Requires gamma > 0.
int loqcs_closed_form_index(double alpha, double gamma, const ModelParams& params);

/// Closed-form LOQCS amplitudes
///   C_m  proportional to  (-1)^m gamma^{m/2} sqrt(m! (2N-m)!)
///                         * sum_k C(n,k) C(2N-n, m-k) (-1)^k,
/// renormalized over the N retained levels. Factorials are handled in
/// log space; the alternating inner sum is evaluated exactly whenever its
/// terms are exactly representable, so structural zeros stay exact.
/// Throws InvalidArgument for gamma == 0 (use the recursion builder) and
/// OutOfRegime when the derived index leaves [0, 2N].
StateVector loqcs_closed_form(const LoqcsSpec& spec, const ModelParams& params,
                              BuildDiagnostics* diag = nullptr);

/// Forward three-term recursion
///   C_{m+1} sqrt((m+1)(2N-m)) = sqrt(2N+1) alpha C_m
///                               - gamma C_{m-1} sqrt(m(2N+1-m)),
/// seeded with C_{-1} = 0, C_0 = 1, then normalized. Defined for any real
/// alpha and gamma >= 0; gamma == 0 gives the nonlinear coherent-state
/// branch.
StateVector loqcs_recursion(double alpha, double gamma, const ModelParams& params,
                            BuildDiagnostics* diag = nullptr);

/// Independent numerical route: full eigendecomposition of
/// A + gamma * A^dagger on the enlarged (2N+1)-level ladder representation
/// (where the raising matrix element vanishes at the top on its own),
/// selecting the eigenvalue closest to alpha (ties toward smaller
/// magnitude), then truncating to the N workspace levels and
/// renormalizing. Phase convention: largest-magnitude amplitude real
/// positive. For gamma == 0 the operator is nilpotent and the unique
/// eigenvector is the vacuum.
StateVector loqcs_eigen_oracle(double alpha, double gamma, const ModelParams& params);

/// Dispatches on spec.method. gamma == 0 with the closed-form method is
/// routed to the recursion builder, which is the well-defined limit.
StateVector loqcs_state(const LoqcsSpec& spec, const ModelParams& params,
                        BuildDiagnostics* diag = nullptr);

/// Residual ||(A + gamma A^dagger) psi - alpha psi|| of the approximate
/// eigenvalue problem on the N-level workspace.
double loqcs_residual(const StateVector& psi, double alpha, double gamma,
                      const ModelParams& params);

/// Displacement-operator coherent state: amplitudes proportional to
/// sqrt(C(2N, n)) zeta^n for n = 0..N-1, renormalized numerically over
/// the truncated space.
StateVector docs_state(std::complex<double> zeta, const ModelParams& params);

/// DPSCS closed form: amplitudes proportional to
///   C(2N, n+m) C(2N, n)^{-1/2} ((n+m)!/n!) zeta^{n+m}
/// for n = 0..N-1-m, zero above, normalized (log-space arithmetic).
/// Throws OutOfRegime when m >= N or the state is numerically empty.
StateVector dpscs_state(const DpscsSpec& spec, const ModelParams& params,
                        BuildDiagnostics* diag = nullptr);

/// Literal route: applies the lowering matrix m times to docs_state and
/// renormalizes. Agrees with dpscs_state exactly on the truncated space.
StateVector dpscs_matrix_oracle(const DpscsSpec& spec, const ModelParams& params);

}  // namespace morse
