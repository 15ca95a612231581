#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Core>

namespace rcg {

// Error families. The numeric values double as process exit codes and as
// C-API status codes, so keep them stable.
enum class ErrorKind { validation = 2, numeric = 3, io = 4 };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string msg)
      : std::runtime_error(std::move(msg)), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(std::string msg)
      : Error(ErrorKind::validation, std::move(msg)) {}
};

class NumericError : public Error {
 public:
  explicit NumericError(std::string msg)
      : Error(ErrorKind::numeric, std::move(msg)) {}
};

class IoError : public Error {
 public:
  explicit IoError(std::string msg) : Error(ErrorKind::io, std::move(msg)) {}
};

class NotPositiveDefiniteError : public NumericError {
 public:
  NotPositiveDefiniteError(std::string msg, double min_eigenvalue,
                           double threshold)
      : NumericError(std::move(msg)),
        min_eigenvalue_(min_eigenvalue),
        threshold_(threshold) {}
  double min_eigenvalue() const noexcept { return min_eigenvalue_; }
  double threshold() const noexcept { return threshold_; }

 private:
  double min_eigenvalue_;
  double threshold_;
};

class DecompositionError : public NumericError {
 public:
  DecompositionError(std::string msg, int pivot)
      : NumericError(std::move(msg)), pivot_(pivot) {}
  int pivot() const noexcept { return pivot_; }

 private:
  int pivot_;
};

// Iterative solvers attach their last iterate and residual so callers can
// inspect or salvage a failed run.
class ConvergenceError : public NumericError {
 public:
  ConvergenceError(std::string msg, Eigen::MatrixXd last_iterate,
                   double residual)
      : NumericError(std::move(msg)),
        last_iterate_(std::move(last_iterate)),
        residual_(residual) {}
  const Eigen::MatrixXd& last_iterate() const noexcept {
    return last_iterate_;
  }
  double residual() const noexcept { return residual_; }

 private:
  Eigen::MatrixXd last_iterate_;
  double residual_;
};

// Rethrows the active rcg::Error with a context prefix, preserving its kind
// and (for the payload-carrying types) its payload.
[[noreturn]] void rethrow_with_context(const Error& e, const std::string& ctx);

}  // namespace rcg
