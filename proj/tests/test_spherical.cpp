#include "mcone/localglobal.hpp"
#include "mcone/spherical.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace mcone;

namespace {

Vec v2(double a, double b) { return (Vec(2) << a, b).finished(); }
Vec v3(double a, double b, double c) { return (Vec(3) << a, b, c).finished(); }

SpherePath arc(const Vec& from, const Vec& to, double angle, int samples) {
  SpherePath p;
  for (int i = 0; i < samples; ++i) {
    const double t = angle * i / (samples - 1);
    p.points.push_back(std::cos(t) * from + std::sin(t) * to);
    p.params.push_back(static_cast<double>(i) / (samples - 1));
  }
  return p;
}

}  // namespace

TEST(Spherical, RadializeStraightLine) {
  std::vector<Vec> path;
  for (int i = 0; i <= 20; ++i) path.push_back(v2(1.0 - 0.1 * i, 1.0));
  const SpherePath g = radialize(path);
  // Oracle: the angle arctan2(c, x) decreases monotonically from pi/4 to 3pi/4.
  double prev = -1;
  for (const auto& p : g.points) {
    const double theta = std::atan2(p(1), p(0));
    EXPECT_GT(theta, prev);
    prev = theta;
  }
  EXPECT_TRUE(is_weakly_monotone_geodesic(g));
  EXPECT_NEAR(path_length(g), kPi / 2, 1e-12);
}

TEST(Spherical, RadializeConstantAndOrigin) {
  const SpherePath g = radialize({v3(0, 0, 5), v3(0, 0, 5)});
  EXPECT_LT((g.points[1] - v3(0, 0, 1)).norm(), 1e-15);
  EXPECT_THROW(radialize({v2(1, 0), v2(0, 0)}), DomainError);
}

TEST(Spherical, RadializedStraightPathsAreGeodesics) {
  std::mt19937_64 rng(13);
  int tested = 0;
  while (tested < 300) {
    const Vec a = oracle::gaussian(rng, 3), b = oracle::gaussian(rng, 3);
    if (oracle::segment_origin_distance(a, b) < 0.5) continue;
    ++tested;
    const SpherePath g = radialize(oracle::monotone_straight(rng, a, b, 30));
    EXPECT_TRUE(is_weakly_monotone_geodesic(g));
    EXPECT_LT(path_length(g), kPi);
  }
}

TEST(Spherical, LiftToStraight) {
  const SpherePath c{{v2(0, 1), v2(0, 1)}, {0, 1}};
  const auto seg = lift_to_straight(c, 2, 3);
  EXPECT_LT((seg.front() - v2(0, 2)).norm(), 1e-15);
  EXPECT_LT((seg.back() - v2(0, 3)).norm(), 1e-15);

  const SpherePath q = arc(v2(1, 0), v2(0, 1), kPi / 2, 50);
  const auto chord = lift_to_straight(q, 1, 1);
  EXPECT_TRUE(is_weakly_monotone_straight(chord));
  for (std::size_t i = 0; i < chord.size(); ++i) {
    EXPECT_NEAR(chord[i](0) + chord[i](1), 1.0, 1e-12);
    EXPECT_LT((chord[i].normalized() - q.points[i]).norm(), 1e-9);
  }
  EXPECT_THROW(lift_to_straight(arc(v2(1, 0), v2(0, 1), kPi, 10), 1, 1), DomainError);
}

TEST(Spherical, LiftRadializeRoundTrip) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> ang(0.01, kPi - 0.05), lam(0.1, 10);
  for (int trial = 0; trial < 300; ++trial) {
    const Vec a = oracle::gaussian(rng, 4).normalized();
    Vec b = oracle::gaussian(rng, 4);
    b = (b - b.dot(a) * a).normalized();
    const SpherePath g = arc(a, b, ang(rng), 25);
    const auto lifted = lift_to_straight(g, lam(rng), lam(rng));
    EXPECT_TRUE(is_weakly_monotone_straight(lifted, 1e-9 * (1 + lifted.front().norm() + lifted.back().norm())));
    const SpherePath back = radialize(lifted);
    for (std::size_t i = 0; i < g.points.size(); ++i) EXPECT_LT((back.points[i] - g.points[i]).norm(), 1e-9);
  }
}

TEST(Spherical, Gnomonic) {
  EXPECT_LT(gnomonic(v3(0, 0, 1)).norm(), 1e-15);
  EXPECT_LT((gnomonic(v3(1 / std::sqrt(2.0), 0, 1 / std::sqrt(2.0))) - v2(1, 0)).norm(), 1e-12);
  EXPECT_THROW(gnomonic(v3(1, 0, 0)), DomainError);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    const Vec y = oracle::gaussian(rng, 3);
    EXPECT_LT((gnomonic(gnomonic_inv(y)) - y).norm(), 1e-12 * std::max(1.0, y.norm()));
  }
}

TEST(Spherical, GnomonicCarriesGeodesicsToStraightPaths) {
  std::mt19937_64 rng(23);
  int tested = 0;
  while (tested < 100) {
    const Vec a = gnomonic_inv(oracle::gaussian(rng, 2));
    const Vec b = gnomonic_inv(oracle::gaussian(rng, 2));
    if (std::abs(a.dot(b)) > 1 - 1e-6) continue;
    ++tested;
    // Geodesic a -> b as the radialized chord.
    const SpherePath g = radialize(oracle::monotone_straight(rng, a, b, 20));
    std::vector<Vec> flat;
    for (const auto& p : g.points) flat.push_back(gnomonic(p));
    EXPECT_TRUE(is_weakly_monotone_straight(flat, 1e-9 * (1 + flat.front().norm() + flat.back().norm())));
  }
}

TEST(Spherical, Hypotenuse) {
  EXPECT_NEAR(hypotenuse(kPi / 2, kPi / 2), kPi / 2, 1e-15);
  EXPECT_NEAR(hypotenuse(2 * kPi / 3, kPi / 3), std::acos(-0.25), 1e-12);
  EXPECT_LT(hypotenuse(2 * kPi / 3, kPi / 3), 2 * kPi / 3);
  for (int i = 1; i < 100; ++i)
    for (int j = 1; j < 100; ++j) {
      const double a = kPi / 2 + (kPi / 2) * i / 100, b = kPi * j / 100;
      EXPECT_LT(hypotenuse(a, b), a + 1e-12);
      EXPECT_DOUBLE_EQ(hypotenuse(a, b), hypotenuse(b, a));
    }
}

TEST(Spherical, GeodesicChecker) {
  EXPECT_TRUE(is_weakly_monotone_geodesic({{v3(0, 0, 1), v3(0, 0, 1)}, {0, 1}}));
  EXPECT_TRUE(is_weakly_monotone_geodesic(arc(v3(1, 0, 0), v3(0, 1, 0), kPi / 2, 100)));
  SpherePath v = arc(v3(1, 0, 0), v3(0, 1, 0), kPi / 2, 20);
  const SpherePath second = arc(v3(0, 1, 0), v3(0, 0, 1), kPi / 2, 20);
  v.points.insert(v.points.end(), second.points.begin() + 1, second.points.end());
  v.params.clear();
  for (std::size_t i = 0; i < v.points.size(); ++i) v.params.push_back(static_cast<double>(i));
  EXPECT_FALSE(is_weakly_monotone_geodesic(v));
  // Backtracking along one circle is not monotone either.
  SpherePath back = arc(v2(1, 0), v2(0, 1), kPi / 2, 10);
  back.points.push_back(back.points[5]);
  back.params.push_back(2.0);
  EXPECT_FALSE(is_weakly_monotone_geodesic(back));
  // Repeated points are allowed.
  SpherePath rep = arc(v2(1, 0), v2(0, 1), kPi / 2, 10);
  rep.points.insert(rep.points.begin() + 3, rep.points[3]);
  rep.params.insert(rep.params.begin() + 3, rep.params[3]);
  EXPECT_TRUE(is_weakly_monotone_geodesic(rep));
}

namespace {

DiscretizedSpace circle_cover(int n, int per_turn) {
  std::vector<Vec> values;
  std::vector<Edge> edges;
  const int total = n * per_turn;
  for (int i = 0; i < total; ++i) {
    const double t = 2 * kPi * i / per_turn;
    values.push_back(v2(std::cos(t), std::sin(t)));
    edges.emplace_back(i, (i + 1) % total);
  }
  return DiscretizedSpace(2, values, edges);
}

}  // namespace

TEST(Spherical, ClassifyCircleMaps) {
  for (int n = 1; n <= 3; ++n) {
    const CircleClass c = classify_circle_map(circle_cover(n, 64));
    EXPECT_EQ(c.kind, CircleClass::Kind::Cover);
    EXPECT_EQ(c.m, n);
  }
  const DiscretizedSpace constant(2, std::vector<Vec>(4, v2(0, 1)), {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EXPECT_EQ(classify_circle_map(constant).kind, CircleClass::Kind::Constant);

  std::vector<Vec> values;
  std::vector<Edge> edges;
  for (int i = 0; i <= 90; ++i) {
    const double t = 3 * kPi / 4 * i / 90;
    values.push_back(v2(std::cos(t), std::sin(t)));
    if (i) edges.emplace_back(i - 1, i);
  }
  const CircleClass a = classify_circle_map(DiscretizedSpace(2, values, edges));
  EXPECT_EQ(a.kind, CircleClass::Kind::Interval);
  EXPECT_NEAR(a.theta0, 0.0, 1e-12);
  EXPECT_NEAR(a.theta1, 3 * kPi / 4, 1e-12);

  const DiscretizedSpace antipodal(2, {v2(1, 0), v2(-1, 0)}, {{0, 1}});
  EXPECT_THROW(classify_circle_map(antipodal), DomainError);
  const DiscretizedSpace off(2, {v2(2, 0), v2(0, 1)}, {{0, 1}});
  EXPECT_THROW(classify_circle_map(off), DomainError);
}
