// SPDX-License-Identifier: Apache-2.0
#include "morse/combinatorics.hpp"

#include <cmath>
#include <limits>

namespace morse {

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

double log_binomial(int n, int k) {
  if (k < 0 || k > n) {
    return -std::numeric_limits<double>::infinity();
  }
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

double binomial_exact(int n, int k) {
  if (k < 0 || k > n) {
    return 0.0;
  }
  // lgamma has ~1e-15 relative error, far below the 0.5 absolute error
  // rounding can absorb while C(n, k) < 2^53.
  return std::round(std::exp(log_binomial(n, k)));
}

}  // namespace morse
