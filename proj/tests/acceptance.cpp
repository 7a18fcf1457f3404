// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any
// criterion fails.

#include "mcone/contact_examples.hpp"
#include "mcone/counterexamples.hpp"
#include "mcone/simplex.hpp"
#include "mcone/spherical.hpp"
#include "mcone/tables.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

using namespace mcone;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& check) {
  Outcome o;
  try {
    o = check();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::printf("[%s] criterion %d: %s -- %s\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str());
  std::fflush(stdout);
}

// Collects mismatch descriptions; pass iff none.
struct Tally {
  int checked = 0;
  std::vector<std::string> bad;
  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok && bad.size() < 5) bad.push_back(what);
    if (!ok && bad.size() == 5) bad.push_back("...");
  }
  Outcome outcome(const std::string& summary) const {
    std::string d = summary + " (" + std::to_string(checked) + " checks)";
    for (const auto& b : bad) d += "; " + b;
    return {bad.empty(), d};
  }
};

int restricted_count(double a, double b_prime, int k, double mu, int res) {
  const DiscretizedSpace x = sample(ContactExample::restrict_to_circle(ContactExample::interval(a, b_prime, k)), res);
  return level_component_count(x, {Vec::Constant(1, mu), 2 * x.mesh_h()});
}

std::string flags(const AnalysisReport& r) {
  return std::string(r.c1 ? "✓" : "×") + (r.c2 ? "✓" : "×") + (r.c3 ? "✓" : "×");
}

Outcome criterion1() {
  const auto start = std::chrono::steady_clock::now();
  struct Row {
    const char* name;
    ContactExample ex;
    const char* expected;
  };
  const Row rows[] = {{"M_1", ContactExample::mn(1), "✓✓✓"},
                      {"M_2", ContactExample::mn(2), "✓×✓"},
                      {"M_[0,3pi/4]", ContactExample::interval(0, 3 * kPi / 4), "✓✓✓"},
                      {"M_[0,5pi/4]", ContactExample::interval(0, 5 * kPi / 4), "×✓✓"},
                      {"M_[0,2pi]", ContactExample::interval(0, 2 * kPi), "✓××"}};
  Tally t;
  for (const auto& r : rows) {
    const std::string got = flags(analyze(r.ex, 512));
    t.expect(got == r.expected, std::string(r.name) + " gave " + got + ", expected " + r.expected);
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t.expect(secs < 10.0, "runtime " + std::to_string(secs) + " s exceeds 10 s");
  char buf[64];
  std::snprintf(buf, sizeof buf, "5 rows at resolution 512 in %.2f s", secs);
  return t.outcome(buf);
}

Outcome criterion2() {
  Tally t;
  const int res = 1024;
  struct Spot {
    double a, b;
    int k;
    int expected[3];
  };
  const Spot spots[] = {{-kPi / 2, kPi / 4, 0, {0, 1, 1}}, {-kPi / 2, kPi / 2, 0, {0, 2, 1}}, {0, kPi, 1, {2, 3, 2}}};
  for (const auto& s : spots) {
    int got[3];
    const double mus[] = {-0.5, 0.0, 0.5};
    for (int i = 0; i < 3; ++i) got[i] = restricted_count(s.a, s.b, s.k, mus[i], res);
    std::ostringstream name;
    name << "a=" << pi_fraction(s.a) << ",b'=" << pi_fraction(s.b) << ",k=" << s.k << " gave (" << got[0] << ","
         << got[1] << "," << got[2] << ")";
    t.expect(std::equal(got, got + 3, s.expected), name.str());
  }
  const DiscretizedSpace x = sample(ContactExample::restrict_to_circle(ContactExample::interval(-kPi / 2, kPi / 4)), res);
  t.expect(image_tag_1d(x) == "x>=0", "image of a=-pi/2,b'=pi/4 is " + image_tag_1d(x));
  // Increments k -> k+1: (+1, +2, +1) on the row a = 0, b' = pi.
  for (int k = 0; k < 2; ++k) {
    const double mus[] = {-0.5, 0.0, 0.5};
    const int inc[] = {1, 2, 1};
    for (int i = 0; i < 3; ++i) {
      const int d = restricted_count(0, kPi, k + 1, mus[i], res) - restricted_count(0, kPi, k, mus[i], res);
      t.expect(d == inc[i], "increment k=" + std::to_string(k) + "->" + std::to_string(k + 1) + " at mu=" +
                                std::to_string(mus[i]) + " is " + std::to_string(d));
    }
  }
  return t.outcome("spot rows and k increments at resolution 1024");
}

Outcome criterion3() {
  Tally t;
  for (int table : {3, 4}) {
    const auto got = reproduce_table(table);
    const auto want = parse_csv(load_golden(table));
    t.expect(got.size() == want.size(), "table " + std::to_string(table) + " row count");
    for (std::size_t i = 0; i < std::min(got.size(), want.size()); ++i)
      t.expect(got[i] == want[i], "table " + std::to_string(table) + " " + got[i].params + " gave " + got[i].c1 +
                                      got[i].c2 + got[i].c3 + ", expected " + want[i].c1 + want[i].c2 + want[i].c3);
  }
  return t.outcome("tables 3 and 4 flag rows");
}

Outcome criterion4() {
  Tally t;
  for (int n = 1; n <= 3; ++n) {
    const DiscretizedSpace x = sample(ContactExample::restrict_to_circle(ContactExample::mn(n)), 512);
    for (double mu : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
      const int c = level_component_count(x, {Vec::Constant(1, mu), 2 * x.mesh_h()});
      const int want = mu == 0.0 ? 2 * n : n;
      t.expect(c == want, "n=" + std::to_string(n) + " mu=" + std::to_string(mu) + " gave " + std::to_string(c));
    }
  }
  return t.outcome("n components off zero, 2n at zero, n = 1, 2, 3");
}

Outcome criterion5() {
  Tally t;
  const AnalysisReport c = analyze(ContactExample::complement(3), 64);
  for (const auto& l : c.levels) {
    if (l.mu.isZero())
      t.expect(l.count == 2, "complement zero level count " + std::to_string(l.count));
    else
      t.expect(l.count == 1, "complement nonzero level count " + std::to_string(l.count));
  }
  t.expect(c.c1 && c.momentum_cone.is_whole_space(), "complement cone is not all of R^2");
  const AnalysisReport cut = analyze(ContactExample::cut(3), 64);
  const PolyCone half = intersect_halfspace(PolyCone::whole_space(2), {(Vec(2) << 0, 1).finished()});
  bool same = cut.momentum_cone.halfspaces().size() == half.halfspaces().size();
  for (std::size_t i = 0; same && i < half.halfspaces().size(); ++i)
    same = (cut.momentum_cone.halfspaces()[i].normal - half.halfspaces()[i].normal).norm() < 1e-9;
  t.expect(same, "cut cone is not the closed half-plane");
  t.expect(cut.c1, "cut cone not convex");
  t.expect(cut.levels.front().mu.isZero() && cut.levels.front().count == 2, "cut zero level count");
  return t.outcome("k = 3 complement and cut");
}

Outcome criterion6() {
  Tally t;
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> nn(1, 5), kk(1, 4);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = nn(rng), k = kk(rng);
    std::vector<Vec> cols;
    for (int j = 0; j < n; ++j) cols.push_back(oracle::gaussian(rng, k));
    if (trial % 4 == 0 && n >= 2) cols[static_cast<std::size_t>(n - 1)] = 0.7 * cols[0];
    const SimplexMap m(cols);
    const std::string id = "instance " + std::to_string(trial);

    const Vec s = oracle::open_simplex_point(rng, n);
    const Vec w = m.apply(s);
    const Vec r = caratheodory_reduce(s, m);
    t.expect((m.apply(r) - w).norm() <= 1e-9 * std::max(1.0, w.norm()), id + ": reduce moved the image");
    std::vector<Vec> support;
    for (int j = 0; j < n; ++j)
      if (r(j) > 0) support.push_back(cols[static_cast<std::size_t>(j)]);
    t.expect(oracle::rank(oracle::columns(support)) == static_cast<int>(support.size()), id + ": dependent support");

    const Vec beta = m.apply(oracle::open_simplex_point(rng, n));
    const Vec sig = section(beta, m);
    t.expect((m.apply(sig) - beta).norm() <= 1e-9 * m.scale(), id + ": L(section) != beta");
    t.expect(in_open_simplex(sig), id + ": section left the open simplex");

    if (beta.norm() > 1e-6) {
      const double lp_t = extremal_scale(beta, m).t;
      double lo = 0.0, hi = 1.0;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        (oracle::in_hull(cols, beta / mid) ? hi : lo) = mid;
      }
      t.expect(std::abs(lp_t - hi) <= 1e-7, id + ": extremal scale " + std::to_string(lp_t) + " vs ray " + std::to_string(hi));
    }

    if (trial % 10 == 0) {
      const Vec x0 = oracle::open_simplex_point(rng, n);
      std::vector<Vec> path{m.apply(x0)};
      for (int i = 0; i < 8; ++i) path.push_back(m.apply(oracle::open_simplex_point(rng, n)));
      // Straight path between image points stays in the convex set A.
      std::vector<Vec> fine;
      for (std::size_t i = 0; i + 1 < path.size(); ++i)
        for (int j = 0; j < 4; ++j) fine.push_back(path[i] + (path[i + 1] - path[i]) * (j / 4.0));
      fine.push_back(path.back());
      const LiftedPath l = lift_path(x0, fine, m);
      const double last = static_cast<double>(fine.size() - 1);
      for (std::size_t i = 0; i < l.points.size(); ++i) {
        const Vec& target = fine[static_cast<std::size_t>(std::lround(l.params[i] * last))];
        t.expect((m.apply(l.points[i]) - target).norm() <= 1e-9 * m.scale(), id + ": lift misses the path");
        if (i) t.expect(l.params[i] >= l.params[i - 1], id + ": lift parameter decreased");
      }
    }
  }
  return t.outcome("1000 random maps, n <= 5, k <= 4");
}

Outcome criterion7() {
  Tally t;
  std::mt19937_64 rng(77);
  int trials = 0;
  while (trials < 1000) {
    const int n = 2 + trials % 3;
    const Vec a = oracle::gaussian(rng, n), b = oracle::gaussian(rng, n);
    if (oracle::segment_origin_distance(a, b) < 0.3) continue;
    ++trials;
    const SpherePath g = radialize(oracle::monotone_straight(rng, a, b, 25));
    t.expect(is_weakly_monotone_geodesic(g), "radialized path rejected");
    t.expect(path_length(g) < kPi, "radialized path too long");
    const auto lifted = lift_to_straight(g, 0.5 + trials % 7, 1.0 + trials % 5);
    const SpherePath back = radialize(lifted);
    double err = 0;
    for (std::size_t i = 0; i < g.points.size(); ++i) err = std::max(err, (back.points[i] - g.points[i]).norm());
    t.expect(err <= 1e-9, "round trip error " + std::to_string(err));
  }
  for (int i = 1; i <= 100; ++i)
    for (int j = 1; j <= 100; ++j) {
      const double a = kPi / 2 + (kPi / 2) * i / 101, b = kPi * j / 101;
      t.expect(hypotenuse(a, b) < a + 1e-12, "hypotenuse not shorter than leg");
    }
  return t.outcome("1000 radialize/lift trials, 10^4 hypotenuse grid points");
}

Outcome criterion8() {
  Tally t;
  std::mt19937_64 rng(88);
  std::uniform_real_distribution<double> logr(-3.0, 3.0), logl(-1.0, 1.0);
  int trials = 0;
  while (trials < 1000) {
    const int n = 2 + trials % 3;
    const Vec a = oracle::gaussian(rng, n), b = oracle::gaussian(rng, n);
    if (oracle::segment_origin_distance(a, b) < 0.1) continue;
    const double l0 = std::pow(10.0, logl(rng));
    const double l1 = l0 * std::pow(10.0, trials % 10 == 0 ? (trials % 20 == 0 ? 3.0 : -3.0) : logr(rng));
    ++trials;
    const ConifiedPath c = conify_path(oracle::monotone_straight(rng, a, b, 30), l0, l1);
    t.expect(is_weakly_monotone_straight(c.points, 1e-9), "conified path not straight at ratio " + std::to_string(l1 / l0));
  }
  return t.outcome("1000 paths, lambda1/lambda0 in [1e-3, 1e3]");
}

Outcome criterion9() {
  Tally t;
  const HypothesisReport strip = check_local_global(sample_planar_example(PlanarExample::Strip));
  t.expect(!strip.proper && strip.locally_convex && strip.locally_open && !strip.globally_convex, "strip");
  const HypothesisReport fork = check_local_global(sample_planar_example(PlanarExample::Fork));
  t.expect(fork.proper && !fork.locally_convex && fork.locally_open && !fork.globally_convex, "fork");
  const HypothesisReport ladder = check_local_global(sample_planar_example(PlanarExample::Ladder));
  t.expect(ladder.proper && ladder.locally_convex && !ladder.locally_open && !ladder.globally_convex, "ladder");
  t.expect(!openness_verdict(sample_arc(-kPi, kPi, 512)).open, "conified arc over [-pi, pi] judged open");
  t.expect(openness_verdict(sample_sphere_inclusion(3, 32)).open, "sphere inclusion judged not open");
  return t.outcome("three planar sets, arc, sphere inclusion");
}

Outcome criterion10() {
  Tally t;
  for (int n = 1; n <= 3; ++n) {
    const CircleClass c = classify_circle_map(sample(ContactExample::mn(n), 128));
    t.expect(c.kind == CircleClass::Kind::Cover && c.m == n, "M_" + std::to_string(n) + " gave " + to_string(c.kind) +
                                                                 " m=" + std::to_string(c.m));
  }
  const DiscretizedSpace constant(2, std::vector<Vec>(6, (Vec(2) << 0.6, 0.8).finished()),
                                  {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  t.expect(classify_circle_map(constant).kind == CircleClass::Kind::Constant, "constant map");
  const DiscretizedSpace arc = sample_arc(0, 3 * kPi / 4, 97);
  const CircleClass a = classify_circle_map(arc);
  t.expect(a.kind == CircleClass::Kind::Interval && std::abs(a.theta0) <= 2 * arc.mesh_h() &&
               std::abs(a.theta1 - 3 * kPi / 4) <= 2 * arc.mesh_h(),
           "arc map");
  return t.outcome("covers, constant, arc");
}

}  // namespace

int main() {
  report(1, "Table 1 reproduction", criterion1);
  report(2, "Table 2 spot rows", criterion2);
  report(3, "Tables 3-4 reproduction", criterion3);
  report(4, "circle-restricted M_n level counts", criterion4);
  report(5, "complement and cut examples", criterion5);
  report(6, "simplex property suite", criterion6);
  report(7, "spherical property suite", criterion7);
  report(8, "conification", criterion8);
  report(9, "counterexample detectors", criterion9);
  report(10, "circle-map classification", criterion10);
  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
