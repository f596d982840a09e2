// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>
#include <vector>

#include "morse/operators.hpp"
#include "morse/params.hpp"
#include "morse/state.hpp"

namespace morse {

/// Number-operator statistics.
struct NumberStats {
  double mean;
  double variance;
  double normalized_variance;   ///< variance / mean; >1 super-, <1 sub-Poissonian
};

/// Mean, variance and normalized variance of the level occupation.
/// Throws UndefinedStatistic when the mean vanishes (the vacuum has no
/// normalized variance).
NumberStats number_stats(const StateVector& psi);

/// Occupation probabilities p_n = |amps[n]|^2.
std::vector<double> pn_distribution(const StateVector& psi);

/// Level-dependent coefficients of the second-order ladder expansion of
/// the deformed position and momentum, with k = 2N+1:
///   f00(n) = sqrt(k) [f0 + ln((k-2)(k-n-1) / ((k-1-2n)(k-2n))) (1 - delta_{n,0})]
///   f10(n) = f01(n) = sqrt((k-1)/k) (1 + n/(k-n))
///   f20(n) = f02(n) = (k-1)/(2k sqrt(k)) * (-1 / ((1-(n-1)/k)(1-n/k)))
///   g10(n) = -g01(n) = sqrt((k-1)/k) (k-2n)/(k-n)
///   g20(n) = -g02(n) = -(k-1)/(k sqrt(k)) (k-(2n-1)) / (k (1-(n-1)/k)(1-n/k))
/// and f0 = ln k - (H_{k-2} - EulerGamma). All denominators are positive
/// for n <= N-1.
struct XpCoefficients {
  std::vector<double> f00, f10, f01, f20, f02;
  std::vector<double> g10, g01, g20, g02;
  double f0;
  double euler_gamma;   ///< 0.577216, fixed at this precision for reproducible output
};

XpCoefficients xp_coefficients(const ModelParams& params);

/// Assembles scale * (diag(c00) + diag(c10) Adag + A diag(c01)
///                    + diag(c20) Adag^2 + A^2 diag(c02)),
/// i.e. a second-order ladder series with level-dependent coefficients
/// acting on the side shown.
Eigen::MatrixXcd ladder_expansion(std::complex<double> scale,
                                  const std::vector<double>& c00,
                                  const std::vector<double>& c10,
                                  const std::vector<double>& c01,
                                  const std::vector<double>& c20,
                                  const std::vector<double>& c02,
                                  const DenseOperator& lower,
                                  const DenseOperator& raise);

/// Deformed position/momentum pair with hermiticity diagnostics.
///
/// x is assembled exactly as the coefficient table dictates and is
/// hermitian by symmetry of the f-coefficients. For p the raising term
/// carries g10 = -g01 (the antisymmetric pairing a hermitian momentum
/// requires); the deviation of the alternative reading that places g01 on
/// both first-order terms is reported in herm_dev_p_paired for reference.
/// Both operators are symmetrized and flagged hermitian on return.
struct XpOperators {
  DenseOperator x;
  DenseOperator p;
  double herm_dev_x;          ///< pre-symmetrization deviation of x
  double herm_dev_p;          ///< pre-symmetrization deviation of p as built
  double herm_dev_p_paired;   ///< deviation when g01 multiplies both first-order terms
};

XpOperators build_xd_pd(const ModelParams& params);

/// Variances (<O^2> - <O>^2) of two hermitian observables; tiny negative
/// round-off is clamped to zero.
std::pair<double, double> dispersions(const StateVector& psi, const DenseOperator& x,
                                      const DenseOperator& p);

/// Normalized uncertainty product
///   4 <(dx)^2><(dp)^2> / |<[x, p]>|^2,
/// equal to 1 for minimum-uncertainty states and >= 1 always.
/// Throws UndefinedStatistic when the commutator expectation vanishes.
double uncertainty_product(const StateVector& psi, const DenseOperator& x,
                           const DenseOperator& p);

}  // namespace morse
