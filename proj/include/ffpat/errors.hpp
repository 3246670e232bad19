#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ffpat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller supplied an argument outside the documented domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure failed: non-finite values, solver stagnation,
/// divergence.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Conjugate gradient did not reach the requested tolerance.
class ConvergenceError : public NumericalError {
 public:
  ConvergenceError(const std::string& what, std::size_t iterations, double residual)
      : NumericalError(what), iterations_(iterations), residual_(residual) {}

  std::size_t iterations() const noexcept { return iterations_; }
  double residual() const noexcept { return residual_; }

 private:
  std::size_t iterations_;
  double residual_;
};

/// The reconstruction residual kept growing; the iteration was stopped.
class DivergenceError : public NumericalError {
 public:
  DivergenceError(const std::string& what, std::size_t iteration)
      : NumericalError(what), iteration_(iteration) {}

  std::size_t iteration() const noexcept { return iteration_; }

 private:
  std::size_t iteration_;
};

/// Malformed, truncated or unwritable files.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace ffpat
