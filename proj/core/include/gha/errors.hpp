#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gha {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violated precondition on user input.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class OrderMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class DomainError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class ExactModeUnavailable : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class TruncationTooSmall : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class NonIntegralCoefficients : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class SyntaxError : public InvalidArgument {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& message)
      : InvalidArgument(message), offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

class DivisionByZero : public Error {
 public:
  explicit DivisionByZero(std::string subtree)
      : Error("division by zero in '" + subtree + "'"), subtree_(std::move(subtree)) {}

  const std::string& subtree() const noexcept { return subtree_; }

 private:
  std::string subtree_;
};

// Some N_n^2 < 0, so a-dagger cannot be realized with real amplitudes.
class NonUnitaryRepresentation : public Error {
 public:
  NonUnitaryRepresentation(std::size_t level, const std::string& message)
      : Error(message), level_(level) {}

  std::size_t level() const noexcept { return level_; }

 private:
  std::size_t level_;
};

// Numerical failures (CLI exit code 3).
class NumericalError : public Error {
 public:
  using Error::Error;
};

class NonConvergence : public NumericalError {
 public:
  NonConvergence(int max_iter, std::vector<std::complex<double>> best)
      : NumericalError("root finder did not converge within " + std::to_string(max_iter) +
                       " iterations"),
        max_iter_(max_iter),
        best_(std::move(best)) {}

  int max_iter() const noexcept { return max_iter_; }
  const std::vector<std::complex<double>>& best_iterate() const noexcept { return best_; }

 private:
  int max_iter_;
  std::vector<std::complex<double>> best_;
};

class RepeatedRoots : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class ImaginaryResidueTooLarge : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class DominantModeAbsent : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace gha
