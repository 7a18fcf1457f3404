#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcone {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

inline constexpr double kDefaultTol = 1e-9;
inline constexpr double kPi = 3.14159265358979323846;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands do not share a dimension, or a dimension is out of range.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A point that must lie in the annihilator span does not.
class ExactnessError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A path sample left the admissible image set.
class PathExitError : public DomainError {
 public:
  PathExitError(std::size_t index, const std::string& what)
      : DomainError(what), index_(index) {}
  std::size_t sample_index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Malformed serialized input. `field` names the offending JSON path.
class InputError : public Error {
 public:
  InputError(std::string field, const std::string& what)
      : Error(what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// An internal consistency check failed.
class InvariantError : public Error {
 public:
  using Error::Error;
};

inline Vec normalized_or_zero(const Vec& v) {
  const double n = v.norm();
  return n > 0.0 ? Vec(v / n) : Vec(Vec::Zero(v.size()));
}

/// Angle in [0, pi] between two nonzero vectors.
double angle_between(const Vec& a, const Vec& b);

/// Rank of the column set, counting singular values above tol * max(1, s_max).
int numerical_rank(const Mat& m, double tol = kDefaultTol);

Mat columns_to_matrix(const std::vector<Vec>& cols, int rows);

/// Worker count honoring the MCONE_THREADS cap.
unsigned worker_count();

}  // namespace mcone
