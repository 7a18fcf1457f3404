#include "mcone/contact_examples.hpp"

#include "mcone/counterexamples.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace mcone {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

int rings_for(int d, int resolution) {
  int m = resolution / 2;
  if (d == 2) m = std::min(m, 64);
  if (d == 3) m = std::min(m, 20);
  if (d == 4) m = std::min(m, 8);
  if (d >= 5) m = std::min(m, 6);
  m = std::max(m, 4);
  return m - m % 2;
}

int find_root(std::vector<int>& parent, int v) {
  while (parent[static_cast<std::size_t>(v)] != v) {
    parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    v = parent[static_cast<std::size_t>(v)];
  }
  return v;
}

// Sphere family values: the first `keep` coordinates of each point, over
// optional radial layers.
DiscretizedSpace sphere_family(PointGraph g, int keep, int layers) {
  std::vector<Vec> values;
  std::vector<Edge> edges;
  const int np = static_cast<int>(g.points.size());
  layers = std::max(1, layers);
  double step = g.step;
  for (int l = 0; l < layers; ++l) {
    const double r = layers == 1 ? 1.0 : 0.25 * std::pow(16.0, static_cast<double>(l) / (layers - 1));
    for (const auto& p : g.points) values.push_back(r * p.head(keep));
    for (const auto& [a, b] : g.edges) edges.emplace_back(l * np + a, l * np + b);
    if (l > 0) {
      for (int v = 0; v < np; ++v) edges.emplace_back((l - 1) * np + v, l * np + v);
      step = std::max(step, r - 0.25 * std::pow(16.0, static_cast<double>(l - 1) / (layers - 1)));
    }
  }
  return DiscretizedSpace(keep, std::move(values), std::move(edges), step);
}

DiscretizedSpace sample_torus_family(int steps, bool periodic, double t0, double t1, int m,
                                     const std::pair<int, int>* collapse_a, const std::pair<int, int>* collapse_b) {
  const int per = m * m;
  const int slices = periodic ? steps : steps + 1;
  const int total = slices * per;
  auto id = [&](int i, int j1, int j2) { return i * per + ((j1 % m + m) % m) * m + ((j2 % m + m) % m); };
  std::vector<Edge> edges;
  for (int i = 0; i < slices; ++i) {
    for (int j1 = 0; j1 < m; ++j1)
      for (int j2 = 0; j2 < m; ++j2) {
        edges.emplace_back(id(i, j1, j2), id(i, j1 + 1, j2));
        edges.emplace_back(id(i, j1, j2), id(i, j1, j2 + 1));
        if (i + 1 < slices)
          edges.emplace_back(id(i, j1, j2), id(i + 1, j1, j2));
        else if (periodic)
          edges.emplace_back(id(i, j1, j2), id(0, j1, j2));
      }
  }
  std::vector<int> parent(static_cast<std::size_t>(total));
  std::iota(parent.begin(), parent.end(), 0);
  auto collapse = [&](int i, std::pair<int, int> dir) {
    for (int j1 = 0; j1 < m; ++j1)
      for (int j2 = 0; j2 < m; ++j2) {
        const int a = find_root(parent, id(i, j1, j2));
        const int b = find_root(parent, id(i, j1 + dir.first, j2 + dir.second));
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
  };
  if (collapse_a) collapse(0, *collapse_a);
  if (collapse_b) collapse(slices - 1, *collapse_b);

  std::vector<int> remap(static_cast<std::size_t>(total), -1);
  std::vector<Vec> values;
  for (int v = 0; v < total; ++v) {
    const int r = find_root(parent, v);
    if (r != v) continue;
    const int i = v / per;
    const double t = periodic ? t0 + (t1 - t0) * i / steps : (i == steps ? t1 : t0 + (t1 - t0) * i / steps);
    Vec val(2);
    val << std::cos(t), std::sin(t);
    remap[static_cast<std::size_t>(v)] = static_cast<int>(values.size());
    values.push_back(val);
  }
  std::vector<Edge> merged;
  merged.reserve(edges.size());
  for (const auto& [a, b] : edges)
    merged.emplace_back(remap[static_cast<std::size_t>(find_root(parent, a))],
                        remap[static_cast<std::size_t>(find_root(parent, b))]);
  return DiscretizedSpace(2, std::move(values), std::move(merged), (t1 - t0) / steps);
}

// Sign pattern of cos over [a, b]: (negative, zero, positive) attained.
struct CosSigns {
  bool neg = false;
  bool zero = false;
  bool pos = false;
};

CosSigns cos_signs(double a, double b) {
  CosSigns s;
  const double eps = 1e-12;
  if (b - a >= 2.0 * kPi - eps) return {true, true, true};
  auto contains_point = [&](double base, double period) {
    const double j = std::ceil((a - eps - base) / period);
    return base + j * period <= b + eps;
  };
  s.zero = contains_point(kPi / 2, kPi);
  const double hi = contains_point(0.0, 2.0 * kPi) ? 1.0 : std::max(std::cos(a), std::cos(b));
  const double lo = contains_point(kPi, 2.0 * kPi) ? -1.0 : std::min(std::cos(a), std::cos(b));
  s.pos = hi > eps;
  s.neg = lo < -eps;
  return s;
}

std::string tag_from_signs(bool neg, bool zero, bool pos) {
  if (neg && pos) return "R";
  if (pos) return zero ? "x>=0" : "x>0";
  if (neg) return zero ? "x<=0" : "x<0";
  return zero ? "{0}" : "";
}

}  // namespace

std::pair<int, int> collapse_direction(double t) {
  if (!std::isfinite(t)) throw DomainError("collapse_direction: angle must be finite");
  const double dx = -std::sin(t);
  const double dy = std::cos(t);
  for (int h = 1; h <= 64; ++h) {
    for (int p = -h; p <= h; ++p) {
      for (int q = -h; q <= h; ++q) {
        if (std::max(std::abs(p), std::abs(q)) != h || std::gcd(p, q) != 1) continue;
        const double n = std::hypot(p, q);
        if (std::abs(p * dy - q * dx) / n <= 1e-9 && p * dx + q * dy > 0) return {p, q};
      }
    }
  }
  throw DomainError("angle " + fmt(t) + " does not have a rational slope of height <= 64");
}

ContactExample ContactExample::hopf(int n, int orientation) {
  if (n < 1) throw DomainError("HopfSphere: n must be at least 1");
  if (orientation != 1 && orientation != -1) throw DomainError("HopfSphere: orientation must be +1 or -1");
  return ContactExample(HopfSphere{n, orientation});
}

ContactExample ContactExample::complement(int k) {
  if (k < 2 || k > 9) throw DomainError("CotangentTorusComplement: k must be in [2, 9]");
  return ContactExample(CotangentTorusComplement{k});
}

ContactExample ContactExample::cut(int k) {
  if (k < 2 || k > 9) throw DomainError("CutCotangentTorus: k must be in [2, 9]");
  return ContactExample(CutCotangentTorus{k});
}

ContactExample ContactExample::mn(int n, int fiber) {
  if (n < 1) throw DomainError("Mn: n must be a positive integer");
  if (fiber < 3) throw DomainError("Mn: torus fiber needs at least 3 samples per circle");
  return ContactExample(Mn{n, fiber});
}

ContactExample ContactExample::interval(double a, double b_prime, int k, int fiber) {
  if (k < 0) throw DomainError("MInterval: k must be nonnegative");
  if (fiber < 3) throw DomainError("MInterval: torus fiber needs at least 3 samples per circle");
  MInterval m{a, b_prime, k, fiber};
  if (!std::isfinite(a) || !std::isfinite(b_prime) || !(m.b() > a)) throw DomainError("MInterval: need b > a");
  collapse_direction(a);
  collapse_direction(m.b());
  return ContactExample(m);
}

ContactExample ContactExample::restrict_to_circle(const ContactExample& inner) {
  if (inner.value_dim() != 2) throw DimensionError("CircleRestriction: inner example must have planar values");
  return ContactExample(CircleRestriction{std::make_shared<const ContactExample>(inner)});
}

int ContactExample::value_dim() const {
  return std::visit(overloaded{[](const HopfSphere&) { return 1; },
                               [](const CotangentTorusComplement& c) { return c.k - 1; },
                               [](const CutCotangentTorus& c) { return c.k - 1; }, [](const Mn&) { return 2; },
                               [](const MInterval&) { return 2; }, [](const CircleRestriction&) { return 1; }},
                    family_);
}

std::string ContactExample::name() const {
  return std::visit(overloaded{[](const HopfSphere&) -> std::string { return "HopfSphere"; },
                               [](const CotangentTorusComplement&) -> std::string { return "CotangentTorusComplement"; },
                               [](const CutCotangentTorus&) -> std::string { return "CutCotangentTorus"; },
                               [](const Mn&) -> std::string { return "Mn"; },
                               [](const MInterval&) -> std::string { return "MInterval"; },
                               [](const CircleRestriction& c) -> std::string {
                                 return "CircleRestriction(" + c.inner->name() + ")";
                               }},
                    family_);
}

std::vector<std::pair<std::string, double>> ContactExample::params() const {
  using P = std::vector<std::pair<std::string, double>>;
  return std::visit(overloaded{[](const HopfSphere& h) { return P{{"n", h.n}, {"orientation", h.orientation}}; },
                               [](const CotangentTorusComplement& c) { return P{{"k", c.k}}; },
                               [](const CutCotangentTorus& c) { return P{{"k", c.k}}; },
                               [](const Mn& m) { return P{{"n", m.n}}; },
                               [](const MInterval& m) { return P{{"a", m.a}, {"b", m.b_prime}, {"k", m.k}}; },
                               [](const CircleRestriction& c) { return c.inner->params(); }},
                    family_);
}

Vec psi_alpha(const ContactExample& ex, const Vec& p) {
  auto need = [&](Eigen::Index n, const char* who) {
    if (p.size() != n) throw DomainError(std::string(who) + ": point has the wrong number of coordinates");
    if (!p.allFinite()) throw DomainError(std::string(who) + ": non-finite coordinate");
  };
  return std::visit(
      overloaded{[&](const HopfSphere& h) -> Vec {
                   need(2 * h.n, "psi_alpha(HopfSphere)");
                   return Vec::Constant(1, h.orientation * p.squaredNorm() / 2.0);
                 },
                 [&](const CotangentTorusComplement& c) -> Vec {
                   need(c.k, "psi_alpha(CotangentTorusComplement)");
                   if (p.norm() == 0.0) throw DomainError("psi_alpha: the zero section is removed");
                   return p.head(c.k - 1);
                 },
                 [&](const CutCotangentTorus& c) -> Vec {
                   need(c.k, "psi_alpha(CutCotangentTorus)");
                   if (p.norm() == 0.0) throw DomainError("psi_alpha: the zero section is removed");
                   if (p(c.k - 2) < 0.0) throw DomainError("psi_alpha: point lies beyond the cut");
                   return p.head(c.k - 1);
                 },
                 [&](const Mn&) -> Vec {
                   if (p.size() != 1 && p.size() != 3) throw DomainError("psi_alpha(Mn): expected (t) or (t, theta1, theta2)");
                   Vec v(2);
                   v << std::cos(p(0)), std::sin(p(0));
                   return v;
                 },
                 [&](const MInterval& m) -> Vec {
                   if (p.size() != 1 && p.size() != 3)
                     throw DomainError("psi_alpha(MInterval): expected (t) or (t, theta1, theta2)");
                   if (p(0) < m.a - 1e-12 || p(0) > m.b() + 1e-12) throw DomainError("psi_alpha: t outside [a, b]");
                   Vec v(2);
                   v << std::cos(p(0)), std::sin(p(0));
                   return v;
                 },
                 [&](const CircleRestriction& c) -> Vec { return psi_alpha(*c.inner, p).head(1); }},
      ex.family());
}

DiscretizedSpace sample(const ContactExample& ex, int resolution, const SampleOptions& opts) {
  if (resolution < 16) throw DomainError("sample: resolution must be at least 16");
  return std::visit(
      overloaded{[&](const HopfSphere& h) {
                   const int d = 2 * h.n - 1;
                   PointGraph g = sphere_grid(d, rings_for(d, resolution));
                   std::vector<Vec> vals(g.points.size(), Vec::Constant(1, h.orientation * 0.5));
                   return DiscretizedSpace(1, std::move(vals), std::move(g.edges), g.step);
                 },
                 [&](const CotangentTorusComplement& c) {
                   return sphere_family(sphere_grid(c.k - 1, rings_for(c.k - 1, resolution)), c.k - 1,
                                        opts.shell_layers);
                 },
                 [&](const CutCotangentTorus& c) {
                   PointGraph g = sphere_grid(c.k - 1, rings_for(c.k - 1, resolution), true);
                   // Move the hemisphere axis onto coordinate k-1.
                   for (auto& p : g.points) std::swap(p(c.k - 1), p(c.k - 2));
                   return sphere_family(std::move(g), c.k - 1, opts.shell_layers);
                 },
                 [&](const Mn& m) {
                   return sample_torus_family(resolution * m.n, true, 0.0, 2.0 * kPi * m.n, m.fiber, nullptr, nullptr);
                 },
                 [&](const MInterval& m) {
                   const double len = m.b() - m.a;
                   const int steps = std::max(16, static_cast<int>(std::ceil(resolution * len / (2.0 * kPi) - 1e-9)));
                   const auto da = collapse_direction(m.a);
                   const auto db = collapse_direction(m.b());
                   return sample_torus_family(steps, false, m.a, m.b(), m.fiber, &da, &db);
                 },
                 [&](const CircleRestriction& c) {
                   DiscretizedSpace inner = sample(*c.inner, resolution, opts);
                   std::vector<Vec> vals;
                   vals.reserve(static_cast<std::size_t>(inner.size()));
                   for (const auto& v : inner.values()) vals.push_back(v.head(1));
                   std::vector<Edge> edges = inner.edges();
                   return DiscretizedSpace(1, std::move(vals), std::move(edges), inner.declared_step());
                 }},
      ex.family());
}

ContactExample contact_cut(const ContactExample& ex, double a, double b) {
  if (const auto* m = std::get_if<Mn>(&ex.family())) {
    if (b - a > 2.0 * kPi * m->n + 1e-12) throw DomainError("contact_cut: [a, b] is longer than the t-circle");
    return ContactExample::interval(a, b, 0, m->fiber);
  }
  if (const auto* m = std::get_if<MInterval>(&ex.family())) {
    if (a < m->a - 1e-12 || b > m->b() + 1e-12) throw DomainError("contact_cut: [a, b] must lie inside the interval");
    return ContactExample::interval(a, b, 0, m->fiber);
  }
  throw DomainError("contact_cut: only Mn and interval examples can be cut");
}

PolyCone cut_cone(double a, double b) {
  collapse_direction(a);
  collapse_direction(b);
  if (!(b > a)) throw DomainError("cut_cone: need b > a");
  PolyCone c = PolyCone::whole_space(2);
  if (b - a > kPi + 1e-12) return c;
  Vec na(2), nb(2);
  na << -std::sin(a), std::cos(a);
  nb << std::sin(b), -std::cos(b);
  c = intersect_halfspace(c, {na});
  return intersect_halfspace(c, {nb});
}

std::string symbolic_image(const ContactExample& ex) {
  return std::visit(
      overloaded{[](const HopfSphere& h) -> std::string { return h.orientation > 0 ? "x>0" : "x<0"; },
                 [](const CotangentTorusComplement& c) -> std::string {
                   return c.k == 2 ? "R" : "R^" + std::to_string(c.k - 1);
                 },
                 [](const CutCotangentTorus& c) -> std::string {
                   return c.k == 2 ? "x>=0" : "{x in R^" + std::to_string(c.k - 1) + " : x_" +
                                                     std::to_string(c.k - 1) + " >= 0}";
                 },
                 [](const Mn&) -> std::string { return "R^2 \\ {0}"; },
                 [](const MInterval& m) -> std::string {
                   if (m.b() - m.a >= 2.0 * kPi - 1e-12) return "R^2 \\ {0}";
                   return "{(r cos t, r sin t) : " + fmt(m.a) + " <= t <= " + fmt(m.b()) + ", r > 0}";
                 },
                 [](const CircleRestriction& c) -> std::string {
                   if (const auto* m = std::get_if<MInterval>(&c.inner->family())) {
                     const CosSigns s = cos_signs(m->a, m->b());
                     return tag_from_signs(s.neg, s.zero, s.pos);
                   }
                   return "R";
                 }},
      ex.family());
}

std::string image_tag_1d(const DiscretizedSpace& x) {
  if (x.dim() != 1) throw DimensionError("image_tag_1d: values must be one-dimensional");
  bool neg = false, zero = false, pos = false;
  for (const auto& v : x.values()) {
    if (v(0) > kZeroValue)
      pos = true;
    else if (v(0) < -kZeroValue)
      neg = true;
    else
      zero = true;
  }
  return tag_from_signs(neg, zero, pos);
}

Vec model_momentum(const LocalModel& m, const std::vector<std::complex<double>>& z, const Vec& nu) {
  if (z.size() != m.weights.size()) throw DimensionError("model_momentum: one coordinate per weight is required");
  if (nu.size() != m.base.size()) throw DimensionError("model_momentum: nu dimension mismatch");
  if (!in_span(m.h0_basis, nu, 1e-9)) throw ExactnessError("model_momentum: nu is not in the annihilator span");
  Vec out = m.base + nu;
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (m.weights[j].size() != m.base.size()) throw DimensionError("model_momentum: weight dimension mismatch");
    out += 0.5 * std::norm(z[j]) * m.weights[j];
  }
  return out;
}

bool exactness_check(const LocalModel& m) {
  for (const auto& h : m.h0_basis)
    if (h.size() != m.base.size()) throw DimensionError("exactness_check: basis dimension mismatch");
  return in_span(m.h0_basis, m.base, 1e-9);
}

PolyCone model_cone(const LocalModel& m) { return model_cone(m.weights, m.h0_basis, m.base); }

std::vector<Vec> probe_levels(const DiscretizedSpace& x, int max_directions) {
  std::vector<Vec> out;
  const int n = x.dim();
  if (n == 1) {
    for (double v : {-1.0, -0.5, 0.0, 0.5, 1.0}) out.push_back(Vec::Constant(1, v));
  } else if (n == 2) {
    out.push_back(Vec::Zero(2));
    for (int j = 0; j < 8; ++j) {
      Vec v(2);
      v << std::cos(j * kPi / 4), std::sin(j * kPi / 4);
      out.push_back(v);
    }
  } else {
    out.push_back(Vec::Zero(n));
    for (int i = 0; i < n; ++i) {
      out.push_back(Vec::Unit(n, i));
      out.push_back(-Vec::Unit(n, i));
    }
  }
  if (n >= 2 && max_directions > 0) {
    const std::vector<Vec> dirs = distinct_directions(x);
    const std::size_t stride = std::max<std::size_t>(1, (dirs.size() + max_directions - 1) / max_directions);
    for (std::size_t i = 0; i < dirs.size(); i += stride) out.push_back(dirs[i]);
  }
  return out;
}

AnalysisReport analyze(const ContactExample& ex, int resolution, const SampleOptions& opts) {
  AnalysisReport r;
  r.family = ex.name();
  r.params = ex.params();
  r.resolution = resolution;
  const DiscretizedSpace x = sample(ex, resolution, opts);
  r.vertices = x.size();
  r.mesh_h = x.mesh_h();
  r.image_description = symbolic_image(ex);
  if (x.dim() == 1) r.sampled_image = image_tag_1d(x);
  if (connected_components(x, std::vector<bool>(static_cast<std::size_t>(x.size()), true)).count != 1)
    throw InvariantError("analyze: sampled space is not connected");

  const ConvexityVerdict conv = convexity_verdict(x, 0);
  r.momentum_cone = conv.cone;
  r.c1 = conv.convex;
  if (!conv.convex) r.notes.push_back("c1: " + conv.reason);

  const std::vector<Vec> levels = probe_levels(x);
  r.levels.resize(levels.size());
  const double tol = 2.0 * x.mesh_h();
  for (std::size_t i = 0; i < levels.size(); ++i)
    r.levels[i] = LevelEntry{levels[i], level_component_count(x, LevelQuery{levels[i], tol})};
  r.c2 = std::all_of(r.levels.begin(), r.levels.end(), [](const LevelEntry& e) { return e.mu.norm() == 0.0 || e.count <= 1; });

  const OpennessVerdict open = openness_verdict(x);
  r.c3 = open.open;
  if (!open.open) r.notes.push_back("c3: target direction not attained near vertex " + std::to_string(open.witness_vertex));

  bool has_zero = false;
  for (const auto& v : x.values())
    if (v.norm() <= tol) has_zero = true;
  // The convexity package is only guaranteed for transverse actions or
  // tori of dimension > 2.
  if (x.dim() <= 2 && has_zero) r.notes.push_back("outside the convexity hypotheses: nontransverse, torus dimension <= 2");
  if (!has_zero) {
    r.notes.push_back("zero is not a sampled value");
  } else {
    const DiscretizedSpace cut = excise(x, tol);
    const bool connected =
        !cut.empty() && connected_components(cut, std::vector<bool>(static_cast<std::size_t>(cut.size()), true)).count == 1;
    r.notes.push_back(std::string("excised space connected: ") + (connected ? "yes" : "no"));
  }
  if (x.dim() == 1 && r.sampled_image != r.image_description)
    throw InvariantError("analyze: sampled image " + r.sampled_image + " differs from " + r.image_description);
  return r;
}

}  // namespace mcone
