// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace morse {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition or configuration value is invalid (bad level index,
/// negative squeeze parameter, dimension mismatch, malformed grid, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The requested construction is undefined in this parameter regime:
/// the derived lattice index falls outside [0, 2N], or the construction
/// yields a numerically empty state.
class OutOfRegime : public Error {
 public:
  using Error::Error;
};

/// The requested statistic is undefined for the given state, e.g. the
/// normalized number variance of the vacuum or an uncertainty product
/// with vanishing commutator expectation.
class UndefinedStatistic : public Error {
 public:
  using Error::Error;
};

}  // namespace morse
