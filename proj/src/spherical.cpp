#include "mcone/spherical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>

namespace mcone {
namespace {

double wrap_pi(double a) {
  a = std::remainder(a, 2.0 * kPi);  // [-pi, pi]
  if (a <= -kPi) a += 2.0 * kPi;
  return a;
}

std::vector<double> uniform_params(std::size_t n) {
  std::vector<double> p(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) p[i] = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
  return p;
}

}  // namespace

SpherePath radialize(const std::vector<Vec>& path) {
  if (path.empty()) throw DomainError("radialize: empty path");
  SpherePath out;
  const auto dim = path.front().size();
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i].size() != dim) throw DimensionError("radialize: dimension mismatch");
    const double n = path[i].norm();
    if (!(n > 1e-9)) throw DomainError("radialize: path passes through the origin at sample " + std::to_string(i));
    out.points.push_back(path[i] / n);
  }
  out.params = uniform_params(path.size());
  return out;
}

double path_length(const SpherePath& p) {
  double len = 0.0;
  for (std::size_t i = 1; i < p.points.size(); ++i) len += angle_between(p.points[i - 1], p.points[i]);
  return len;
}

bool is_weakly_monotone_geodesic(const SpherePath& p, double tol) {
  if (p.points.size() <= 1) return true;
  for (std::size_t i = 1; i < p.params.size(); ++i)
    if (p.params[i] < p.params[i - 1]) return false;
  const Vec& first = p.points.front();
  bool constant = true;
  for (const auto& x : p.points)
    if ((x - first).norm() > tol) constant = false;
  if (constant) return true;

  const int dim = static_cast<int>(first.size());
  if (dim < 2) return false;
  Mat rows(static_cast<Eigen::Index>(p.points.size()), dim);
  for (std::size_t i = 0; i < p.points.size(); ++i) rows.row(static_cast<Eigen::Index>(i)) = p.points[i].transpose();
  Eigen::JacobiSVD<Mat> svd(rows, Eigen::ComputeThinV);
  const Vec e1 = svd.matrixV().col(0);
  const Vec e2 = svd.matrixV().col(1);
  const double len = path_length(p);
  const double fit_tol = tol * (len + 1.0);
  std::vector<double> theta;
  for (const auto& x : p.points) {
    const double c = x.dot(e1);
    const double s = x.dot(e2);
    if ((x - c * e1 - s * e2).norm() > fit_tol) return false;
    theta.push_back(std::atan2(s, c));
  }
  double lo = 0.0;
  double hi = 0.0;
  for (std::size_t i = 1; i < theta.size(); ++i) {
    const double d = wrap_pi(theta[i] - theta[i - 1]);
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  return lo >= -tol || hi <= tol;
}

std::vector<Vec> lift_to_straight(const SpherePath& g, double lambda0, double lambda1) {
  if (g.points.empty()) throw DomainError("lift_to_straight: empty path");
  if (!(lambda0 > 0.0) || !(lambda1 > 0.0)) throw DomainError("lift_to_straight: scales must be positive");
  if (!is_weakly_monotone_geodesic(g, 1e-9)) throw DomainError("lift_to_straight: not a weakly monotone geodesic");
  const Vec& g0 = g.points.front();
  const Vec& g1 = g.points.back();
  const double span = angle_between(g0, g1);
  const double len = path_length(g);
  if (len >= kPi - 1e-12) throw DomainError("lift_to_straight: geodesic length must be below pi");

  std::vector<Vec> out;
  if (span <= 1e-12) {
    // Constant geodesic: a radial segment.
    const double p0 = g.params.front();
    const double p1 = g.params.back();
    for (std::size_t i = 0; i < g.points.size(); ++i) {
      const double u = p1 > p0 ? (g.params[i] - p0) / (p1 - p0) : static_cast<double>(i) / std::max<std::size_t>(1, g.points.size() - 1);
      out.push_back(((1.0 - u) * lambda0 + u * lambda1) * g0);
    }
    return out;
  }
  // Radial projection onto the chord from a to b.
  const Vec a = lambda0 * g0;
  const Vec b = lambda1 * g1;
  const Vec chord = b - a;
  for (const auto& x : g.points) {
    Mat sys(x.size(), 2);
    sys.col(0) = x;
    sys.col(1) = -chord;
    const Vec sol = sys.colPivHouseholderQr().solve(a);
    const double nu = std::clamp(sol(1), 0.0, 1.0);
    const Vec y = a + nu * chord;
    // Re-project radially so the normalization matches x exactly.
    out.push_back(y.norm() * x);
  }
  out.front() = a;
  out.back() = b;
  return out;
}

Vec gnomonic(const Vec& x) {
  const auto n = x.size();
  if (n < 2) throw DimensionError("gnomonic: dimension must be at least 2");
  if (!(x(n - 1) > 1e-9)) throw DomainError("gnomonic: point is not in the open upper hemisphere");
  return x.head(n - 1) / x(n - 1);
}

Vec gnomonic_inv(const Vec& y) {
  Vec x(y.size() + 1);
  x.head(y.size()) = y;
  x(y.size()) = 1.0;
  return x / x.norm();
}

double hypotenuse(double a, double b) {
  if (!(a > 0.0 && a < kPi && b > 0.0 && b < kPi)) throw DomainError("hypotenuse: legs must lie in (0, pi)");
  return std::acos(std::clamp(std::cos(a) * std::cos(b), -1.0, 1.0));
}

const char* to_string(CircleClass::Kind k) {
  switch (k) {
    case CircleClass::Kind::Interval:
      return "Interval";
    case CircleClass::Kind::Cover:
      return "Cover";
    case CircleClass::Kind::Constant:
      return "Constant";
  }
  return "?";
}

CircleClass classify_circle_map(const DiscretizedSpace& x, double tol) {
  if (x.empty()) throw DomainError("classify_circle_map: empty space");
  if (x.dim() != 2) throw DimensionError("classify_circle_map: values must lie in R^2");
  std::vector<double> angle(static_cast<std::size_t>(x.size()));
  for (int v = 0; v < x.size(); ++v) {
    if (std::abs(x.value(v).norm() - 1.0) > 1e-6)
      throw DomainError("classify_circle_map: value off the unit circle at vertex " + std::to_string(v));
    angle[static_cast<std::size_t>(v)] = std::atan2(x.value(v)(1), x.value(v)(0));
  }
  auto increment = [&](int u, int v) {
    const double d = wrap_pi(angle[static_cast<std::size_t>(v)] - angle[static_cast<std::size_t>(u)]);
    if (std::abs(d) >= kPi - 1e-9)
      throw DomainError("classify_circle_map: antipodal values on edge (" + std::to_string(u) + ", " +
                        std::to_string(v) + ")");
    return d;
  };

  std::vector<double> lift(static_cast<std::size_t>(x.size()), 0.0);
  std::vector<int> parent(static_cast<std::size_t>(x.size()), -2);
  std::queue<int> q;
  parent[0] = -1;
  lift[0] = angle[0];
  q.push(0);
  int seen = 1;
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int v : x.neighbors(u)) {
      if (parent[static_cast<std::size_t>(v)] != -2) continue;
      parent[static_cast<std::size_t>(v)] = u;
      lift[static_cast<std::size_t>(v)] = lift[static_cast<std::size_t>(u)] + increment(u, v);
      q.push(v);
      ++seen;
    }
  }
  if (seen != x.size()) throw DomainError("classify_circle_map: space is not connected");

  long g = 0;
  for (const auto& [u, v] : x.edges()) {
    const double d = increment(u, v);
    const double gap = lift[static_cast<std::size_t>(u)] + d - lift[static_cast<std::size_t>(v)];
    const long w = std::lround(gap / (2.0 * kPi));
    g = std::gcd(g, std::labs(w));
  }
  CircleClass out;
  if (g > 0) {
    out.kind = CircleClass::Kind::Cover;
    out.m = static_cast<int>(g);
    return out;
  }
  const auto [lo, hi] = std::minmax_element(lift.begin(), lift.end());
  if (*hi - *lo <= tol) {
    out.kind = CircleClass::Kind::Constant;
    out.theta0 = out.theta1 = angle[0];
    return out;
  }
  out.kind = CircleClass::Kind::Interval;
  const double shift = 2.0 * kPi * std::floor((*lo + kPi) / (2.0 * kPi));
  out.theta0 = *lo - shift;
  out.theta1 = *hi - shift;
  return out;
}

}  // namespace mcone
