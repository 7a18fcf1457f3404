#include "mcone/contact_examples.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace mcone;

namespace {

Vec v2(double a, double b) { return (Vec(2) << a, b).finished(); }
Vec v3(double a, double b, double c) { return (Vec(3) << a, b, c).finished(); }

bool connected(const DiscretizedSpace& x) {
  return connected_components(x, std::vector<bool>(static_cast<std::size_t>(x.size()), true)).count == 1;
}

}  // namespace

TEST(ContactExamples, PsiAlphaFormulas) {
  EXPECT_LT((psi_alpha(ContactExample::mn(2), Vec::Zero(1)) - v2(1, 0)).norm(), 1e-15);
  Vec x = Vec::Zero(4);
  x(2) = 1.0;
  EXPECT_DOUBLE_EQ(psi_alpha(ContactExample::hopf(2), x)(0), 0.5);
  EXPECT_DOUBLE_EQ(psi_alpha(ContactExample::hopf(2, -1), x)(0), -0.5);
  EXPECT_LT((psi_alpha(ContactExample::complement(3), v3(1, 2, 7)) - v2(1, 2)).norm(), 1e-15);
  const ContactExample r = ContactExample::restrict_to_circle(ContactExample::mn(1));
  EXPECT_NEAR(psi_alpha(r, Vec::Constant(1, kPi / 3))(0), 0.5, 1e-15);
  EXPECT_THROW(psi_alpha(ContactExample::complement(3), Vec::Zero(3)), DomainError);
  EXPECT_THROW(psi_alpha(ContactExample::cut(3), v3(1, -1, 0)), DomainError);
  EXPECT_THROW(psi_alpha(ContactExample::hopf(2), Vec::Zero(3)), DomainError);
  EXPECT_THROW(psi_alpha(ContactExample::interval(0, kPi / 2), Vec::Constant(1, 2.0)), DomainError);
}

TEST(ContactExamples, ConstructionValidation) {
  EXPECT_THROW(ContactExample::mn(0), DomainError);
  EXPECT_THROW(ContactExample::interval(1.0, 0.5), DomainError);
  EXPECT_THROW(ContactExample::interval(0, 1.0), DomainError);  // tan 1 is irrational
  EXPECT_NO_THROW(ContactExample::interval(0, std::atan(2.0 / 3.0)));
  EXPECT_THROW(ContactExample::restrict_to_circle(ContactExample::hopf(1)), DimensionError);
}

TEST(ContactExamples, CollapseDirection) {
  EXPECT_EQ(collapse_direction(0.0), std::make_pair(0, 1));
  EXPECT_EQ(collapse_direction(kPi / 2), std::make_pair(-1, 0));
  EXPECT_EQ(collapse_direction(kPi / 4), std::make_pair(-1, 1));
  EXPECT_EQ(collapse_direction(std::atan(2.0 / 3.0)), std::make_pair(-2, 3));
}

TEST(ContactExamples, SamplesAreConnected) {
  EXPECT_TRUE(connected(sample(ContactExample::mn(1), 64)));
  const DiscretizedSpace lens = sample(ContactExample::interval(0, 3 * kPi / 4), 64);
  EXPECT_TRUE(connected(lens));
  // 24 t-steps; the 4x4 fiber collapses to a 4-cycle at both ends.
  EXPECT_EQ(lens.size(), 23 * 16 + 2 * 4);
  EXPECT_TRUE(connected(sample(ContactExample::complement(3), 32)));
  EXPECT_TRUE(connected(sample(ContactExample::complement(3), 32, SampleOptions{4})));
  EXPECT_TRUE(connected(sample(ContactExample::cut(4), 32)));
  EXPECT_THROW(sample(ContactExample::mn(1), 8), DomainError);
}

TEST(ContactExamples, SampledImageInsideSymbolicImage) {
  const double b = 5 * kPi / 4;
  const DiscretizedSpace x = sample(ContactExample::interval(0, b), 128);
  for (const auto& v : x.values()) {
    double t = std::atan2(v(1), v(0));
    if (t < -1e-12) t += 2 * kPi;
    EXPECT_LE(t, b + 2 * x.mesh_h());
    EXPECT_NEAR(v.norm(), 1.0, 1e-12);
  }
  const DiscretizedSpace cut = sample(ContactExample::cut(3), 32);
  for (const auto& v : cut.values()) EXPECT_GE(v(1), -2 * cut.mesh_h());
  const DiscretizedSpace hopf = sample(ContactExample::hopf(2), 32);
  for (const auto& v : hopf.values()) EXPECT_GT(v(0), 0.0);  // transverse: never zero
}

TEST(ContactExamples, ConificationConsistency) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> t(0, 2 * kPi), lam(0.01, 100);
  const ContactExample ex = ContactExample::mn(3);
  for (int i = 0; i < 100; ++i) {
    const double tt = t(rng), l = lam(rng);
    const Vec psi = l * psi_alpha(ex, Vec::Constant(1, tt));
    EXPECT_LT((psi - l * v2(std::cos(tt), std::sin(tt))).norm(), 1e-12 * l);
  }
}

TEST(ContactExamples, CutCones) {
  const PolyCone quad = cut_cone(0, kPi / 2);
  EXPECT_TRUE(contains(quad, v2(1, 1)));
  EXPECT_FALSE(contains(quad, v2(-1, 0.1)));
  EXPECT_FALSE(contains(quad, v2(0.1, -1)));
  EXPECT_TRUE(cut_cone(0, 2 * kPi).is_whole_space());
  const ContactExample cut = contact_cut(ContactExample::mn(1), 0, 5 * kPi / 4);
  EXPECT_FALSE(analyze(cut, 128).c1);
  EXPECT_THROW(contact_cut(ContactExample::hopf(1), 0, 1), DomainError);
}

TEST(ContactExamples, DisconnectedCutIsHalfPlane) {
  // Image R^2 cut by {first coordinate >= 0}.
  const PolyCone half = intersect_halfspace(PolyCone::whole_space(2), {v2(1, 0)});
  EXPECT_TRUE(contains(half, v2(0, -3)));
  EXPECT_FALSE(contains(half, v2(-0.1, 3)));
  const AnalysisReport r = analyze(ContactExample::cut(3), 64);
  EXPECT_TRUE(r.c1);
  EXPECT_FALSE(r.momentum_cone.is_whole_space());
  EXPECT_TRUE(contains(r.momentum_cone, v2(-3, 0)));
  EXPECT_TRUE(contains(r.momentum_cone, v2(5, 1)));
  EXPECT_FALSE(contains(r.momentum_cone, v2(0.3, -1)));
  EXPECT_EQ(r.levels.front().count, 2);  // zero level
}

TEST(ContactExamples, ComplementHigherDimension) {
  const AnalysisReport r = analyze(ContactExample::complement(4), 24);
  EXPECT_TRUE(r.c1);
  EXPECT_TRUE(r.c2);
  EXPECT_TRUE(r.momentum_cone.is_whole_space());
  ASSERT_TRUE(r.levels.front().mu.isZero());
  EXPECT_EQ(r.levels.front().count, 2);
}

TEST(ContactExamples, SymbolicImages) {
  EXPECT_EQ(symbolic_image(ContactExample::hopf(1)), "x>0");
  EXPECT_EQ(symbolic_image(ContactExample::hopf(1, -1)), "x<0");
  EXPECT_EQ(symbolic_image(ContactExample::complement(2)), "R");
  EXPECT_EQ(symbolic_image(ContactExample::cut(2)), "x>=0");
  const auto restricted = [](double a, double b, int k = 0) {
    return symbolic_image(ContactExample::restrict_to_circle(ContactExample::interval(a, b, k)));
  };
  EXPECT_EQ(restricted(-kPi / 2, kPi / 4), "x>=0");
  EXPECT_EQ(restricted(0, kPi / 4), "x>0");
  EXPECT_EQ(restricted(0, kPi), "R");
  EXPECT_EQ(restricted(0, kPi / 4, 1), "R");
  // Shifting [a, b] by pi mirrors the image.
  EXPECT_EQ(restricted(kPi, 5 * kPi / 4), "x<0");
  EXPECT_EQ(restricted(kPi / 2, 5 * kPi / 4), "x<=0");
}

TEST(ContactExamples, ShiftByPiSwapsLevelCounts) {
  const std::pair<double, double> rows[] = {{-kPi / 2, kPi / 4}, {0, kPi / 2}, {0, 7 * kPi / 4}};
  for (const auto& [a, b] : rows) {
    const DiscretizedSpace x = sample(ContactExample::restrict_to_circle(ContactExample::interval(a, b)), 512);
    const DiscretizedSpace y =
        sample(ContactExample::restrict_to_circle(ContactExample::interval(a + kPi, b + kPi)), 512);
    const auto count = [](const DiscretizedSpace& s, double mu) {
      return level_component_count(s, {Vec::Constant(1, mu), 2 * s.mesh_h()});
    };
    EXPECT_EQ(count(x, -0.5), count(y, 0.5));
    EXPECT_EQ(count(x, 0.5), count(y, -0.5));
    EXPECT_EQ(count(x, 0.0), count(y, 0.0));
  }
}

TEST(ContactExamples, LocalModel) {
  LocalModel m{{v2(1, 0)}, {}, Vec::Zero(2)};
  EXPECT_LT(model_momentum(m, {0.0}, Vec::Zero(2)).norm(), 1e-15);
  EXPECT_LT((model_momentum(m, {std::complex<double>(1, 1)}, Vec::Zero(2)) - v2(1, 0)).norm(), 1e-15);
  EXPECT_THROW(model_momentum(m, {0.0}, v2(0, 1)), ExactnessError);
  EXPECT_TRUE(exactness_check(m));
  EXPECT_TRUE(exactness_check(LocalModel{{}, {v2(0, 1)}, v2(0, 1)}));
  EXPECT_FALSE(exactness_check(LocalModel{{}, {v2(0, 1)}, v2(1, 0)}));

  std::mt19937_64 rng(12);
  std::normal_distribution<double> g;
  const LocalModel model{{v3(1, 0, 0), v3(1, 1, 0)}, {v3(0, 0, 1)}, v3(0, 0, 2)};
  const PolyCone cone = model_cone(model);
  for (int i = 0; i < 10000; ++i) {
    const std::vector<std::complex<double>> z{{g(rng), g(rng)}, {g(rng), g(rng)}};
    const Vec p = model_momentum(model, z, v3(0, 0, g(rng)));
    ASSERT_TRUE(contains(cone, p, 1e-9));
  }
}

TEST(ContactExamples, AnalyzeIsDeterministic) {
  const AnalysisReport a = analyze(ContactExample::interval(0, 3 * kPi / 4), 64);
  const AnalysisReport b = analyze(ContactExample::interval(0, 3 * kPi / 4), 64);
  EXPECT_EQ(a.c1, b.c1);
  EXPECT_EQ(a.levels.size(), b.levels.size());
  for (std::size_t i = 0; i < a.levels.size(); ++i) EXPECT_EQ(a.levels[i].count, b.levels[i].count);
  EXPECT_EQ(a.notes, b.notes);
}
