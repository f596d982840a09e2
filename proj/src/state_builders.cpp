// SPDX-License-Identifier: Apache-2.0
#include "morse/state_builders.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "morse/combinatorics.hpp"
#include "morse/errors.hpp"
#include "morse/operators.hpp"

namespace morse {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLeakageWarnThreshold = 1e-2;

void fill_diagnostics(const StateVector& psi, BuildDiagnostics* diag) {
  if (diag == nullptr) {
    return;
  }
  diag->top_level_leakage = std::norm(psi.amps[psi.dim() - 1]);
  diag->regime_warning = diag->top_level_leakage > kLeakageWarnThreshold;
}

void require_loqcs_parameters(double alpha, double gamma) {
  if (!std::isfinite(alpha) || !std::isfinite(gamma)) {
    throw InvalidArgument("loqcs: alpha and gamma must be finite");
  }
  if (gamma < 0.0) {
    throw InvalidArgument("loqcs: squeeze parameter gamma must be >= 0");
  }
}

// S_m = sum_k (-1)^k C(n, k) C(2N-n, m-k) over the admissible k window.
// By Vandermonde each |term| and each partial sum is bounded by C(2N, m),
// so while C(2N, m) fits the double mantissa the direct sum over exact
// binomials is itself exact and structural zeros come out as true zeros.
// Beyond that budget, fall back to sign-tracked summation relative to the
// largest term in log space.
SignedLog alternating_binomial_sum(int n, int m, int two_n) {
  const int k_lo = std::max(0, m - (two_n - n));
  const int k_hi = std::min(n, m);
  if (k_lo > k_hi) {
    return {-kInf, 0};
  }
  const double exact_budget = 52.0 * std::numbers::ln2;
  double total = 0.0;
  if (log_binomial(two_n, m) < exact_budget) {
    for (int k = k_lo; k <= k_hi; ++k) {
      const double term = binomial_exact(n, k) * binomial_exact(two_n - n, m - k);
      total += (k % 2 == 0) ? term : -term;
    }
    if (total == 0.0) {
      return {-kInf, 0};
    }
    return {std::log(std::abs(total)), total > 0.0 ? 1 : -1};
  }
  double log_peak = -kInf;
  for (int k = k_lo; k <= k_hi; ++k) {
    log_peak = std::max(log_peak, log_binomial(n, k) + log_binomial(two_n - n, m - k));
  }
  for (int k = k_lo; k <= k_hi; ++k) {
    const double rel =
        std::exp(log_binomial(n, k) + log_binomial(two_n - n, m - k) - log_peak);
    total += (k % 2 == 0) ? rel : -rel;
  }
  if (total == 0.0) {
    return {-kInf, 0};
  }
  return {log_peak + std::log(std::abs(total)), total > 0.0 ? 1 : -1};
}

StateVector normalized_from_signed_logs(const std::vector<double>& log_mag,
                                        const std::vector<int>& sign) {
  const int dim = static_cast<int>(log_mag.size());
  double peak = -kInf;
  for (int m = 0; m < dim; ++m) {
    if (sign[m] != 0) {
      peak = std::max(peak, log_mag[m]);
    }
  }
  StateVector psi{Eigen::VectorXcd::Zero(dim)};
  for (int m = 0; m < dim; ++m) {
    if (sign[m] != 0) {
      psi.amps[m] = sign[m] * std::exp(log_mag[m] - peak);
    }
  }
  psi.amps /= psi.amps.norm();
  return psi;
}

}  // namespace

std::complex<double> dpscs_zeta(const DpscsSpec& spec, const ModelParams& params) {
  return std::polar(std::tan(spec.alpha_mag * params.chi_a), spec.phi);
}

int loqcs_closed_form_index(double alpha, double gamma, const ModelParams& params) {
  require_loqcs_parameters(alpha, gamma);
  if (gamma == 0.0) {
    throw InvalidArgument(
        "loqcs_closed_form: the lattice index is undefined at gamma = 0; "
        "use the recursion builder for the nonlinear coherent-state branch");
  }
  // [x] rounds to the nearest integer, halves away from zero.
  const double raw = alpha / (2.0 * std::sqrt(params.chi_a * gamma));
  const int n = params.n_levels + static_cast<int>(std::round(raw));
  if (n < 0 || n > 2 * params.n_levels) {
    throw OutOfRegime("loqcs_closed_form: derived index " + std::to_string(n) +
                      " outside [0, " + std::to_string(2 * params.n_levels) +
                      "]; alpha/gamma leave the solution family");
  }
  return n;
}

StateVector loqcs_closed_form(const LoqcsSpec& spec, const ModelParams& params,
                              BuildDiagnostics* diag) {
  const int n_idx = loqcs_closed_form_index(spec.alpha, spec.gamma, params);
  const int dim = params.n_levels;
  const int two_n = 2 * params.n_levels;

  std::vector<double> log_mag(dim, -kInf);
  std::vector<int> sign(dim, 0);
  for (int m = 0; m < dim; ++m) {
    const SignedLog inner = alternating_binomial_sum(n_idx, m, two_n);
    if (inner.sign == 0) {
      continue;
    }
    log_mag[m] = 0.5 * m * std::log(spec.gamma) +
                 0.5 * (log_factorial(m) + log_factorial(two_n - m)) + inner.log_mag;
    sign[m] = (m % 2 == 0 ? 1 : -1) * inner.sign;
  }

  StateVector psi = normalized_from_signed_logs(log_mag, sign);
  fix_phase_first_nonzero(psi);
  fill_diagnostics(psi, diag);
  return psi;
}

StateVector loqcs_recursion(double alpha, double gamma, const ModelParams& params,
                            BuildDiagnostics* diag) {
  require_loqcs_parameters(alpha, gamma);
  const int dim = params.n_levels;
  const int two_n = 2 * params.n_levels;
  const double lambda = std::sqrt(static_cast<double>(two_n + 1)) * alpha;

  Eigen::VectorXd c = Eigen::VectorXd::Zero(dim);
  c[0] = 1.0;
  for (int m = 0; m + 1 < dim; ++m) {
    const double prev = (m >= 1) ? c[m - 1] : 0.0;
    // The leading coefficient sqrt((m+1)(2N-m)) never vanishes for m <= N-2.
    c[m + 1] = (lambda * c[m] -
                gamma * prev * std::sqrt(static_cast<double>(m) * (two_n + 1 - m))) /
               std::sqrt(static_cast<double>(m + 1) * (two_n - m));
  }

  StateVector psi{(c / c.norm()).cast<std::complex<double>>()};
  fix_phase_first_nonzero(psi);
  fill_diagnostics(psi, diag);
  return psi;
}

StateVector loqcs_eigen_oracle(double alpha, double gamma, const ModelParams& params) {
  require_loqcs_parameters(alpha, gamma);
  const int dim = params.n_levels;
  if (gamma == 0.0) {
    // A is strictly upper-band, hence nilpotent: every eigenvalue is 0 and
    // the kernel is spanned by the vacuum.
    return basis_state(dim, 0);
  }

  // On the enlarged 2N+1-level ladder the raising matrix element vanishes
  // at the top on its own. A + gamma A^T is similar, via diag(gamma^{-j/2}),
  // to the symmetric tridiagonal with off-diagonals sqrt(gamma) b_j, which a
  // self-adjoint solver handles accurately; eigenvectors map back through
  // diag(gamma^{j/2}).
  const int full = 2 * params.n_levels + 1;
  Eigen::MatrixXd sym = Eigen::MatrixXd::Zero(full, full);
  for (int j = 1; j < full; ++j) {
    const double band = std::sqrt(j * (1.0 - params.chi_a * j));
    sym(j - 1, j) = sym(j, j - 1) = std::sqrt(gamma) * band;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error("loqcs_eigen_oracle: eigendecomposition failed");
  }

  int best = 0;
  for (int i = 1; i < full; ++i) {
    const double d_best = std::abs(solver.eigenvalues()[best] - alpha);
    const double d_i = std::abs(solver.eigenvalues()[i] - alpha);
    if (d_i < d_best ||
        (d_i == d_best &&
         std::abs(solver.eigenvalues()[i]) < std::abs(solver.eigenvalues()[best]))) {
      best = i;
    }
  }

  const Eigen::VectorXd u = solver.eigenvectors().col(best);
  Eigen::VectorXcd v(dim);
  const double root = std::sqrt(gamma);
  double weight = 1.0;
  for (int j = 0; j < dim; ++j) {
    v[j] = u[j] * weight;
    weight *= root;
  }
  const double nrm = v.norm();
  if (nrm < 1e-300) {
    throw OutOfRegime("loqcs_eigen_oracle: selected eigenvector has no weight on the "
                      "retained levels");
  }
  StateVector psi{v / nrm};
  fix_phase_largest(psi);
  return psi;
}

StateVector loqcs_state(const LoqcsSpec& spec, const ModelParams& params,
                        BuildDiagnostics* diag) {
  switch (spec.method) {
    case LoqcsMethod::closed_form:
      if (spec.gamma == 0.0) {
        // The closed-form index diverges at gamma = 0; the recursion builder
        // is the continuous limit of the same family.
        return loqcs_recursion(spec.alpha, spec.gamma, params, diag);
      }
      return loqcs_closed_form(spec, params, diag);
    case LoqcsMethod::recursion:
      return loqcs_recursion(spec.alpha, spec.gamma, params, diag);
    case LoqcsMethod::eigen_oracle: {
      StateVector psi = loqcs_eigen_oracle(spec.alpha, spec.gamma, params);
      fill_diagnostics(psi, diag);
      return psi;
    }
  }
  throw InvalidArgument("loqcs_state: unknown construction method");
}

double loqcs_residual(const StateVector& psi, double alpha, double gamma,
                      const ModelParams& params) {
  require_loqcs_parameters(alpha, gamma);
  const auto [a, adag] = ladder_matrices(params);
  const Eigen::VectorXcd r =
      a.entries * psi.amps + gamma * (adag.entries * psi.amps) - alpha * psi.amps;
  return r.norm();
}

StateVector docs_state(std::complex<double> zeta, const ModelParams& params) {
  if (!std::isfinite(std::abs(zeta))) {
    throw InvalidArgument("docs_state: zeta must be finite");
  }
  const int dim = params.n_levels;
  const int two_n = 2 * params.n_levels;
  const double mag = std::abs(zeta);
  if (mag == 0.0) {
    return basis_state(dim, 0);
  }
  const double arg = std::arg(zeta);
  const double log_mag = std::log(mag);

  std::vector<double> lm(dim);
  double peak = -kInf;
  for (int n = 0; n < dim; ++n) {
    lm[n] = 0.5 * log_binomial(two_n, n) + n * log_mag;
    peak = std::max(peak, lm[n]);
  }
  StateVector psi{Eigen::VectorXcd(dim)};
  for (int n = 0; n < dim; ++n) {
    psi.amps[n] = std::polar(std::exp(lm[n] - peak), n * arg);
  }
  psi.amps /= psi.amps.norm();
  fix_phase_first_nonzero(psi);
  return psi;
}

namespace {

void require_dpscs_spec(const DpscsSpec& spec, const ModelParams& params) {
  if (!(spec.alpha_mag >= 0.0) || !std::isfinite(spec.alpha_mag)) {
    throw InvalidArgument("dpscs: |alpha| must be finite and >= 0");
  }
  if (!std::isfinite(spec.phi)) {
    throw InvalidArgument("dpscs: phi must be finite");
  }
  if (spec.subtracted < 0) {
    throw InvalidArgument("dpscs: number of subtracted quanta must be >= 0");
  }
  if (spec.subtracted >= params.n_levels) {
    throw OutOfRegime("dpscs: subtracting m = " + std::to_string(spec.subtracted) +
                      " quanta from " + std::to_string(params.n_levels) +
                      " levels leaves an empty state");
  }
}

}  // namespace

StateVector dpscs_state(const DpscsSpec& spec, const ModelParams& params,
                        BuildDiagnostics* diag) {
  require_dpscs_spec(spec, params);
  const int dim = params.n_levels;
  const int two_n = 2 * params.n_levels;
  const int m = spec.subtracted;
  const std::complex<double> zeta = dpscs_zeta(spec, params);
  const double mag = std::abs(zeta);
  if (!std::isfinite(mag)) {
    throw InvalidArgument("dpscs: zeta is not finite");
  }
  if (mag == 0.0) {
    if (m > 0) {
      throw OutOfRegime("dpscs: zeta = 0 with m > 0 leaves an empty state");
    }
    StateVector psi = basis_state(dim, 0);
    fill_diagnostics(psi, diag);
    return psi;
  }
  const double arg = std::arg(zeta);
  const double log_mag = std::log(mag);

  std::vector<double> lm(dim, -kInf);
  double peak = -kInf;
  for (int n = 0; n + m < dim; ++n) {
    lm[n] = log_binomial(two_n, n + m) - 0.5 * log_binomial(two_n, n) +
            log_factorial(n + m) - log_factorial(n) + (n + m) * log_mag;
    peak = std::max(peak, lm[n]);
  }
  StateVector psi{Eigen::VectorXcd::Zero(dim)};
  for (int n = 0; n + m < dim; ++n) {
    psi.amps[n] = std::polar(std::exp(lm[n] - peak), (n + m) * arg);
  }
  const double nrm = psi.amps.norm();
  if (nrm < 1e-300) {
    throw OutOfRegime("dpscs: state is numerically empty");
  }
  psi.amps /= nrm;
  fix_phase_first_nonzero(psi);
  fill_diagnostics(psi, diag);
  return psi;
}

StateVector dpscs_matrix_oracle(const DpscsSpec& spec, const ModelParams& params) {
  require_dpscs_spec(spec, params);
  const StateVector start = docs_state(dpscs_zeta(spec, params), params);
  const DenseOperator a = lowering_matrix(params.n_levels, params.chi_a);

  Eigen::VectorXcd v = start.amps;
  for (int i = 0; i < spec.subtracted; ++i) {
    v = a.entries * v;
  }
  const double nrm = v.norm();
  if (nrm < 1e-300) {
    throw OutOfRegime("dpscs_matrix_oracle: state is numerically empty after "
                      "subtraction");
  }
  StateVector psi{v / nrm};
  fix_phase_first_nonzero(psi);
  return psi;
}

}  // namespace morse
