#pragma once

#include <stdexcept>
#include <string>

namespace blaschke {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the input was violated (degenerate parameter, pole, wrong regime).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An iterative numerical procedure did not reach its tolerance.
class NumericError : public Error {
 public:
  NumericError(const std::string& what, double best_residual)
      : Error(what), best_residual_(best_residual) {}

  double best_residual() const noexcept { return best_residual_; }

 private:
  double best_residual_;
};

/// Reading or writing a file failed; the message carries the path.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace blaschke
