// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace morse {

/// log(n!) via lgamma. Safe for any n that fits an int.
double log_factorial(int n);

/// log C(n, k); returns -infinity when k < 0 or k > n.
double log_binomial(int n, int k);

/// Binomial coefficient recovered exactly from its logarithm.
/// Valid as long as C(n, k) < 2^53; callers must check log_binomial first
/// when n can be large.
double binomial_exact(int n, int k);

/// A real number carried as sign * exp(log_mag). sign == 0 encodes zero.
struct SignedLog {
  double log_mag;
  int sign;
};

}  // namespace morse
