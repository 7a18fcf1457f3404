#pragma once

#include "mcone/discretized.hpp"

#include <vector>

namespace mcone {

/// A sampled path on a unit sphere with a weakly nondecreasing parameter.
struct SpherePath {
  std::vector<Vec> points;
  std::vector<double> params;
};

/// Pointwise normalization of a path avoiding the origin.
SpherePath radialize(const std::vector<Vec>& path);

/// Sum of the great-circle distances between consecutive points.
double path_length(const SpherePath& p);

/// True iff the points lie within tol * (length + 1) of one great circle and
/// the unwound angle along it is weakly monotone within tol.
bool is_weakly_monotone_geodesic(const SpherePath& p, double tol = 1e-9);

/// A weakly monotone straight path from lambda0 * g(0) to lambda1 * g(1)
/// whose normalization is g. Throws DomainError unless g is a weakly
/// monotone geodesic of length < pi.
std::vector<Vec> lift_to_straight(const SpherePath& g, double lambda0, double lambda1);

/// Central projection of the upper hemisphere (x_n > 0) to R^{n-1}.
Vec gnomonic(const Vec& x);
Vec gnomonic_inv(const Vec& y);

/// Hypotenuse of a right spherical triangle with legs a and b.
double hypotenuse(double a, double b);

struct CircleClass {
  enum class Kind { Interval, Cover, Constant };
  Kind kind = Kind::Constant;
  double theta0 = 0.0;  // Interval: lifted range, theta0 in [-pi, pi)
  double theta1 = 0.0;
  int m = 0;            // Cover: number of sheets
};

const char* to_string(CircleClass::Kind k);

/// Classifies a map from a connected graph to the unit circle by lifting
/// angles along a spanning tree and reading off the windings of the
/// remaining edges. Throws DomainError on disconnected input, on values
/// off the unit circle and on edges whose endpoints are antipodal.
CircleClass classify_circle_map(const DiscretizedSpace& x, double tol = 1e-9);

}  // namespace mcone
