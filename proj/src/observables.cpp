// SPDX-License-Identifier: Apache-2.0
#include "morse/observables.hpp"

#include <cmath>
#include <complex>

#include "morse/errors.hpp"

namespace morse {

namespace {

// Fixed at the precision used throughout the coefficient table so that
// emitted data is bit-reproducible.
constexpr double kEulerGamma = 0.577216;

}  // namespace

NumberStats number_stats(const StateVector& psi) {
  double mean = 0.0;
  double second = 0.0;
  for (int n = 0; n < psi.dim(); ++n) {
    const double p = std::norm(psi.amps[n]);
    mean += n * p;
    second += static_cast<double>(n) * n * p;
  }
  if (mean < 1e-14) {
    throw UndefinedStatistic(
        "number_stats: mean occupation vanishes; the normalized variance is "
        "undefined for the vacuum");
  }
  const double variance = second - mean * mean;
  return NumberStats{mean, variance, variance / mean};
}

std::vector<double> pn_distribution(const StateVector& psi) {
  std::vector<double> p(psi.dim());
  for (int n = 0; n < psi.dim(); ++n) {
    p[n] = std::norm(psi.amps[n]);
  }
  return p;
}

XpCoefficients xp_coefficients(const ModelParams& params) {
  const int dim = params.n_levels;
  const double k = static_cast<double>(params.k);
  const double rk = std::sqrt(k);

  double harmonic = 0.0;
  for (int p = 1; p <= params.k - 2; ++p) {
    harmonic += 1.0 / p;
  }
  const double f0 = std::log(k) - (harmonic - kEulerGamma);

  XpCoefficients c;
  c.f0 = f0;
  c.euler_gamma = kEulerGamma;
  c.f00.resize(dim);
  c.f10.resize(dim);
  c.f20.resize(dim);
  c.g10.resize(dim);
  c.g20.resize(dim);
  for (int i = 0; i < dim; ++i) {
    const double n = static_cast<double>(i);
    const double log_term =
        (i == 0) ? 0.0
                 : std::log((k - 2.0) * (k - n - 1.0) / ((k - 1.0 - 2.0 * n) * (k - 2.0 * n)));
    c.f00[i] = rk * (f0 + log_term);
    c.f10[i] = std::sqrt((k - 1.0) / k) * (1.0 + n / (k - n));
    c.f20[i] = (k - 1.0) / (2.0 * k * rk) * (-1.0 / ((1.0 - (n - 1.0) / k) * (1.0 - n / k)));
    c.g10[i] = std::sqrt((k - 1.0) / k) * ((k - 2.0 * n) / (k - n));
    c.g20[i] = -(k - 1.0) / (k * rk) *
               ((k - (2.0 * n - 1.0)) / (k * (1.0 - (n - 1.0) / k) * (1.0 - n / k)));
  }
  c.f01 = c.f10;
  c.f02 = c.f20;
  c.g01.resize(dim);
  c.g02.resize(dim);
  for (int i = 0; i < dim; ++i) {
    c.g01[i] = -c.g10[i];
    c.g02[i] = -c.g20[i];
  }
  return c;
}

Eigen::MatrixXcd ladder_expansion(std::complex<double> scale,
                                  const std::vector<double>& c00,
                                  const std::vector<double>& c10,
                                  const std::vector<double>& c01,
                                  const std::vector<double>& c20,
                                  const std::vector<double>& c02,
                                  const DenseOperator& lower,
                                  const DenseOperator& raise) {
  const int dim = lower.dim();
  if (raise.dim() != dim || static_cast<int>(c00.size()) != dim ||
      static_cast<int>(c10.size()) != dim || static_cast<int>(c01.size()) != dim ||
      static_cast<int>(c20.size()) != dim || static_cast<int>(c02.size()) != dim) {
    throw InvalidArgument("ladder_expansion: dimension mismatch");
  }
  const auto diag = [dim](const std::vector<double>& v) {
    Eigen::VectorXd d(dim);
    for (int i = 0; i < dim; ++i) {
      d[i] = v[i];
    }
    return Eigen::MatrixXcd(d.asDiagonal().toDenseMatrix().cast<std::complex<double>>());
  };
  const Eigen::MatrixXcd& a = lower.entries;
  const Eigen::MatrixXcd& adag = raise.entries;
  return scale * (diag(c00) + diag(c10) * adag + a * diag(c01) +
                  diag(c20) * (adag * adag) + (a * a) * diag(c02));
}

XpOperators build_xd_pd(const ModelParams& params) {
  const XpCoefficients c = xp_coefficients(params);
  const auto [a, adag] = ladder_matrices(params);
  const int dim = params.n_levels;
  const std::vector<double> zeros(dim, 0.0);

  const double sx = std::sqrt(1.0 / (2.0 * params.omega));
  const double sp = std::sqrt(params.omega / 2.0);
  const std::complex<double> i_unit(0.0, 1.0);

  Eigen::MatrixXcd x = ladder_expansion(sx, c.f00, c.f10, c.f01, c.f20, c.f02, a, adag);
  Eigen::MatrixXcd p =
      ladder_expansion(i_unit * sp, zeros, c.g10, c.g01, c.g20, c.g02, a, adag);
  // Alternative reading with g01 on both first-order terms; its bracket is
  // hermitian, so i * (...) is anti-hermitian and the deviation is large.
  // Reported for reference, never used.
  const Eigen::MatrixXcd p_paired =
      ladder_expansion(i_unit * sp, zeros, c.g01, c.g01, c.g20, c.g02, a, adag);

  XpOperators ops;
  ops.herm_dev_x = hermiticity_deviation(x);
  ops.herm_dev_p = hermiticity_deviation(p);
  ops.herm_dev_p_paired = hermiticity_deviation(p_paired);
  ops.x = DenseOperator{(x + x.adjoint()) / 2.0, true};
  ops.p = DenseOperator{(p + p.adjoint()) / 2.0, true};
  return ops;
}

std::pair<double, double> dispersions(const StateVector& psi, const DenseOperator& x,
                                      const DenseOperator& p) {
  if (!x.hermitian || !p.hermitian) {
    throw InvalidArgument("dispersions: observables must be hermitian");
  }
  const auto variance = [&psi](const DenseOperator& op) {
    const Eigen::VectorXcd applied = op.entries * psi.amps;
    const double second = applied.squaredNorm();   // <O^2> for hermitian O
    const double first = psi.amps.dot(applied).real();
    return std::max(second - first * first, 0.0);
  };
  return {variance(x), variance(p)};
}

double uncertainty_product(const StateVector& psi, const DenseOperator& x,
                           const DenseOperator& p) {
  const auto [var_x, var_p] = dispersions(psi, x, p);
  const Eigen::VectorXcd xp = x.entries * (p.entries * psi.amps);
  const Eigen::VectorXcd px = p.entries * (x.entries * psi.amps);
  const std::complex<double> comm = psi.amps.dot(xp - px);
  const double comm_mag = std::abs(comm);
  if (comm_mag < 1e-12) {
    throw UndefinedStatistic(
        "uncertainty_product: commutator expectation vanishes; the normalized "
        "product is undefined");
  }
  return 4.0 * var_x * var_p / (comm_mag * comm_mag);
}

}  // namespace morse
