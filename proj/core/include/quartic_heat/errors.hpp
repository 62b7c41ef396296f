// Copyright 2026 The quartic-heat Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef QUARTIC_HEAT_ERRORS_HPP
#define QUARTIC_HEAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qheat {

/// Input outside the mathematical domain of an operation (non-elliptic
/// coefficients, unsupported regime/direction pairs, malformed data).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative solver ran out of iterations.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A quadrature could not reach the requested accuracy.
class ToleranceError : public std::runtime_error {
 public:
  ToleranceError(const std::string& what, double best_value,
                 double estimated_error)
      : std::runtime_error(what),
        best_value_(best_value),
        estimated_error_(estimated_error) {}

  double best_value() const noexcept { return best_value_; }
  double estimated_error() const noexcept { return estimated_error_; }

 private:
  double best_value_;
  double estimated_error_;
};

}  // namespace qheat

#endif  // QUARTIC_HEAT_ERRORS_HPP
