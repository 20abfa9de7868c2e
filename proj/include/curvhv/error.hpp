#pragma once

#include <stdexcept>
#include <string>

namespace curvhv {

// Base of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid user input: parameters, specs, grids. Raised before any computation starts.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A point or value outside the domain of a chart or formula.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Any failure of a numerical procedure on otherwise valid input.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// The solved-for coefficient of a recurrence vanishes.
class ResonanceError : public NumericalError {
 public:
  ResonanceError(const std::string& what, int gamma, int k)
      : NumericalError(what), gamma_(gamma), k_(k) {}
  int gamma() const { return gamma_; }
  int k() const { return k_; }

 private:
  int gamma_;
  int k_;
};

// Radial recurrence singular at k = 1 or k = 1 +- 2|m|.
class AngularResonanceError : public ResonanceError {
 public:
  AngularResonanceError(const std::string& what, int gamma, int k, int m)
      : ResonanceError(what, gamma, k), m_(m) {}
  int m() const { return m_; }

 private:
  int m_;
};

// A jet ran out of derivative orders.
class TruncationError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// The dependency walk needs a moment that no relation or seed can produce.
class UnreachableMomentError : public NumericalError {
 public:
  UnreachableMomentError(const std::string& what, int gamma, int k)
      : NumericalError(what), gamma_(gamma), k_(k) {}
  int gamma() const { return gamma_; }
  int k() const { return k_; }

 private:
  int gamma_;
  int k_;
};

// An expectation value that does not exist for the state at hand.
class DivergentMomentError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class ConvergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// A classical orbit reached the edge of the gnomonic chart.
class ChartBoundaryError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class PeriodNotFoundError : public NumericalError {
 public:
  PeriodNotFoundError(const std::string& what, double best_guess)
      : NumericalError(what), best_guess_(best_guess) {}
  double best_guess() const { return best_guess_; }

 private:
  double best_guess_;
};

}  // namespace curvhv
