#include "mcone/contact_examples.hpp"
#include "mcone/counterexamples.hpp"
#include "mcone/localglobal.hpp"
#include "mcone/spherical.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace mcone;

namespace {

Vec v2(double a, double b) { return (Vec(2) << a, b).finished(); }

DiscretizedSpace cliques(int a, int b) {
  std::vector<Vec> values(static_cast<std::size_t>(a + b), Vec::Ones(1));
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i)
    for (int j = i + 1; j < a; ++j) edges.emplace_back(i, j);
  for (int i = a; i < a + b; ++i)
    for (int j = i + 1; j < a + b; ++j) edges.emplace_back(i, j);
  return DiscretizedSpace(1, values, edges);
}

}  // namespace

TEST(LocalGlobal, ConnectedComponents) {
  const DiscretizedSpace one = cliques(5, 0);
  EXPECT_EQ(connected_components(one, std::vector<bool>(5, true)).count, 1);
  const DiscretizedSpace two = cliques(3, 4);
  const Components c = connected_components(two, std::vector<bool>(7, true));
  EXPECT_EQ(c.count, 2);
  EXPECT_EQ(c.label[2], 0);
  EXPECT_EQ(c.label[6], 3);
  const Components none = connected_components(two, [](int) { return false; });
  EXPECT_EQ(none.count, 0);
  EXPECT_EQ(none.label[0], -1);
}

TEST(LocalGlobal, ComplementZeroLevelHasTwoComponents) {
  const DiscretizedSpace x = sample(ContactExample::complement(3), 64);
  EXPECT_EQ(level_component_count(x, LevelQuery{Vec::Zero(2), 2 * x.mesh_h()}), 2);
}

TEST(LocalGlobal, LevelCountsOfRestrictedMn) {
  const DiscretizedSpace x = sample(ContactExample::restrict_to_circle(ContactExample::mn(2)), 512);
  const double tol = 2 * x.mesh_h();
  EXPECT_EQ(level_component_count(x, {Vec::Constant(1, 0.5), tol}), 2);
  EXPECT_EQ(level_component_count(x, {Vec::Constant(1, 0.0), tol}), 4);
  const DiscretizedSpace y =
      sample(ContactExample::restrict_to_circle(ContactExample::interval(-kPi / 2, kPi / 4)), 512);
  EXPECT_EQ(level_component_count(y, {Vec::Constant(1, -0.5), 2 * y.mesh_h()}), 0);
  EXPECT_THROW(level_component_count(x, {Vec::Constant(1, 0.5), 0.5 * x.mesh_h()}), DomainError);
}

TEST(LocalGlobal, LevelCountStableUnderRefinement) {
  for (const auto& ex : {ContactExample::restrict_to_circle(ContactExample::interval(0, kPi, 1)),
                         ContactExample::restrict_to_circle(ContactExample::mn(3))}) {
    const DiscretizedSpace coarse = sample(ex, 256), fine = sample(ex, 512);
    for (double mu : {-0.5, 0.0, 0.5})
      EXPECT_EQ(level_component_count(coarse, {Vec::Constant(1, mu), 2 * coarse.mesh_h()}),
                level_component_count(fine, {Vec::Constant(1, mu), 2 * fine.mesh_h()}));
  }
}

TEST(LocalGlobal, DpsiShortestPath) {
  const DiscretizedSpace x = sample(ContactExample::mn(1), 256);
  EXPECT_EQ(d_psi_shortest_path(x, 3, 3).length, 0.0);
  // t = 0 is slice 0, t = pi is slice 128; 16 fiber vertices per slice.
  const GraphPath p = d_psi_shortest_path(x, 0, 128 * 16);
  EXPECT_NEAR(p.length, kPi, 2 * x.mesh_h());
  EXPECT_TRUE(monotone_geodesic_check(x, std::vector<int>(p.vertices.begin(), p.vertices.begin() + 20)));

  const DiscretizedSpace arc = sample_arc(0, kPi, 200);
  EXPECT_NEAR(d_psi_shortest_path(arc, 0, 199).length, kPi, 1e-9);

  const DiscretizedSpace two = cliques(2, 2);
  EXPECT_THROW(d_psi_shortest_path(two, 0, 3), DomainError);
}

TEST(LocalGlobal, DpsiIsAMetric) {
  const DiscretizedSpace x = sample(ContactExample::interval(0, 5 * kPi / 4), 128);
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> pick(0, x.size() - 1);
  for (int i = 0; i < 30; ++i) {
    const int a = pick(rng), b = pick(rng), c = pick(rng);
    const double ab = d_psi_shortest_path(x, a, b).length, ba = d_psi_shortest_path(x, b, a).length;
    EXPECT_NEAR(ab, ba, 1e-12);
    EXPECT_LE(ab, d_psi_shortest_path(x, a, c).length + d_psi_shortest_path(x, c, b).length + 1e-12);
  }
}

TEST(LocalGlobal, Excision) {
  const DiscretizedSpace hopf = sample(ContactExample::hopf(2), 32);
  EXPECT_EQ(excise(hopf, 0.1).size(), hopf.size());

  const DiscretizedSpace c = sample(ContactExample::complement(3), 64);
  std::vector<int> kept;
  const DiscretizedSpace cut = excise(c, 2 * c.mesh_h(), &kept);
  EXPECT_LT(cut.size(), c.size());
  EXPECT_EQ(connected_components(cut, std::vector<bool>(static_cast<std::size_t>(cut.size()), true)).count, 1);
  for (int v = 0; v < cut.size(); ++v) EXPECT_EQ(cut.value(v), c.value(kept[static_cast<std::size_t>(v)]));

  // Unit circle with phi = inclusion: nothing below radius 1, everything below 2.
  const DiscretizedSpace circle = sample_arc(0, 2 * kPi - 0.1, 50);
  EXPECT_EQ(excise(circle, 0.5).size(), 50);
  EXPECT_TRUE(excise(circle, 2.0).empty());
}

TEST(LocalGlobal, StraightChecker) {
  EXPECT_TRUE(is_weakly_monotone_straight({v2(0, 0), v2(3, 1)}));
  const auto b = [](double x) { return Vec::Constant(1, x); };
  EXPECT_FALSE(is_weakly_monotone_straight({b(0), b(1), b(0.5)}));
  EXPECT_FALSE(is_weakly_monotone_straight({v2(0, 0), v2(0.5, 0.1), v2(1, 0)}));
}

TEST(LocalGlobal, ConifyPath) {
  const std::vector<Vec> line{v2(1, 0), v2(0.5, 0.5), v2(0, 1)};
  const ConifiedPath same = conify_path(line, 1, 1);
  for (std::size_t i = 0; i < line.size(); ++i) {
    EXPECT_NEAR(same.lambda[i], 1.0, 1e-15);
    EXPECT_LT((same.points[i] - line[i]).norm(), 1e-15);
  }
  const ConifiedPath radial = conify_path(std::vector<Vec>(5, v2(0, 1)), 1, 2);
  for (std::size_t i = 1; i < radial.lambda.size(); ++i) EXPECT_GE(radial.lambda[i], radial.lambda[i - 1]);
  EXPECT_NEAR(radial.lambda.back(), 2.0, 1e-15);
  EXPECT_TRUE(is_weakly_monotone_straight(radial.points));
  EXPECT_THROW(conify_path({v2(1, 0), v2(1, 1), v2(0, 1)}, 1, 1), DomainError);

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const Vec a = oracle::gaussian(rng, 3), b = oracle::gaussian(rng, 3);
    if (oracle::segment_origin_distance(a, b) < 0.1) continue;
    const ConifiedPath c = conify_path(oracle::monotone_straight(rng, a, b, 20), 0.5, 3);
    EXPECT_TRUE(is_weakly_monotone_straight(c.points, 1e-9));
    EXPECT_LT((c.points.front() - 0.5 * a).norm(), 1e-12);
    EXPECT_LT((c.points.back() - 3 * b).norm(), 1e-12);
  }
}

TEST(LocalGlobal, OpennessVerdicts) {
  EXPECT_TRUE(openness_verdict(sample(ContactExample::mn(1), 256)).open);
  EXPECT_FALSE(openness_verdict(sample(ContactExample::interval(0, 2 * kPi), 256)).open);
  EXPECT_FALSE(openness_verdict(sample(ContactExample::restrict_to_circle(ContactExample::interval(-kPi / 2, kPi)), 256)).open);
}

TEST(LocalGlobal, ConvexityVerdicts) {
  EXPECT_TRUE(convexity_verdict(sample(ContactExample::mn(2), 128)).convex);
  const ConvexityVerdict wedge = convexity_verdict(sample(ContactExample::interval(0, 5 * kPi / 4), 256));
  EXPECT_FALSE(wedge.convex);
  const ConvexityVerdict hopf = convexity_verdict(sample(ContactExample::hopf(1), 32));
  EXPECT_TRUE(hopf.convex);
  EXPECT_TRUE(contains(hopf.cone, Vec::Constant(1, 4.0)));
  EXPECT_FALSE(contains(hopf.cone, Vec::Constant(1, -1.0)));
}

TEST(LocalGlobal, PlanarCounterexamples) {
  const HypothesisReport strip = check_local_global(sample_planar_example(PlanarExample::Strip));
  EXPECT_FALSE(strip.proper);
  EXPECT_TRUE(strip.locally_convex);
  EXPECT_TRUE(strip.locally_open);
  EXPECT_FALSE(strip.globally_convex);

  const HypothesisReport fork = check_local_global(sample_planar_example(PlanarExample::Fork));
  EXPECT_TRUE(fork.proper);
  EXPECT_FALSE(fork.locally_convex);
  EXPECT_TRUE(fork.locally_open);
  EXPECT_FALSE(fork.globally_convex);

  const HypothesisReport ladder = check_local_global(sample_planar_example(PlanarExample::Ladder));
  EXPECT_TRUE(ladder.proper);
  EXPECT_TRUE(ladder.locally_convex);
  EXPECT_FALSE(ladder.locally_open);
  EXPECT_FALSE(ladder.globally_convex);
}

TEST(LocalGlobal, ConifiedArcAndSphereInclusion) {
  EXPECT_FALSE(openness_verdict(sample_arc(-kPi, kPi, 400)).open);
  EXPECT_TRUE(openness_verdict(sample_arc(0, kPi / 2, 200)).open);
  EXPECT_TRUE(openness_verdict(sample_sphere_inclusion(3, 24)).open);
}
