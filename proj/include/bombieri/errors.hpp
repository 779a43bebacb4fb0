#pragma once

#include <stdexcept>
#include <string>

namespace bombieri {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of a function (e.g. an endpoint
/// passed to an interior-only evaluator, or w <= -1/4).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration (grid multiplier, tolerances, sample counts).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Integer arguments out of range, e.g. (m, n) not satisfying 2 <= n < m.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Polynomial is not of the form z + a_2 z^2 + ...
class NormalizationError : public Error {
 public:
  using Error::Error;
};

/// z f'(z) / f(z) has a pole on or inside the closed unit disk.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Neither Schur-Cohn reduction nor root finding could decide the zero count.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature exhausted its subdivision budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace bombieri
