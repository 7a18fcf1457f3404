#include "mcone/counterexamples.hpp"

#include "mcone/localglobal.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>

namespace mcone {
namespace {

struct Builder {
  std::vector<Vec> pos;
  std::vector<Edge> edges;
  std::map<std::pair<long, long>, int> index;  // lattice coordinates -> vertex
  int add(long i, long j, double h) {
    const auto [it, fresh] = index.emplace(std::make_pair(i, j), static_cast<int>(pos.size()));
    if (fresh) {
      Vec p(2);
      p << static_cast<double>(i) * h, static_cast<double>(j) * h;
      pos.push_back(p);
    }
    return it->second;
  }
  void link(long i0, long j0, long i1, long j1) {
    const auto a = index.find({i0, j0});
    const auto b = index.find({i1, j1});
    if (a != index.end() && b != index.end()) edges.emplace_back(a->second, b->second);
  }
};

std::vector<int> ball(const DiscretizedSpace& x, int v, int radius, const std::vector<bool>* within = nullptr) {
  std::vector<int> depth(static_cast<std::size_t>(x.size()), -1);
  std::vector<int> out{v};
  depth[static_cast<std::size_t>(v)] = 0;
  std::queue<int> q;
  q.push(v);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    if (depth[static_cast<std::size_t>(u)] == radius) continue;
    for (int w : x.neighbors(u)) {
      if (depth[static_cast<std::size_t>(w)] >= 0) continue;
      if (within && !(*within)[static_cast<std::size_t>(w)]) continue;
      depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(u)] + 1;
      out.push_back(w);
      q.push(w);
    }
  }
  return out;
}

// Distinct values among the given vertices, merged within tol.
std::vector<Vec> distinct_values(const DiscretizedSpace& x, const std::vector<int>& vs, double tol) {
  std::vector<Vec> out;
  for (int v : vs) {
    bool dup = false;
    for (const auto& w : out)
      if ((w - x.value(v)).norm() <= tol) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(x.value(v));
  }
  return out;
}

}  // namespace

DiscretizedSpace sample_planar_example(PlanarExample which, int per_unit) {
  if (per_unit < 4) throw DomainError("sample_planar_example: need at least 4 samples per unit");
  const double h = 1.0 / per_unit;
  const long n = per_unit;
  Builder b;
  std::vector<bool> frontier;
  switch (which) {
    case PlanarExample::Strip: {
      for (long i = 1; i <= n; ++i)
        for (long j = -n; j <= n; ++j) b.add(i, j, h);
      b.add(0, n, h);
      b.add(0, -n, h);
      for (long i = 1; i <= n; ++i)
        for (long j = -n; j <= n; ++j) {
          b.link(i, j, i + 1, j);
          b.link(i, j, i, j + 1);
        }
      b.link(0, n, 1, n);
      b.link(0, -n, 1, -n);
      frontier.assign(b.pos.size(), false);
      for (long j = -n; j <= n; ++j) frontier[static_cast<std::size_t>(b.index.at({1, j}))] = true;
      break;
    }
    case PlanarExample::Fork: {
      for (long i = -n; i <= 0; ++i) b.add(i, 0, h);
      for (long i = 1; i <= n; ++i) {
        b.add(i, i, h);
        b.add(i, -i, h);
      }
      for (long i = -n; i < 0; ++i) b.link(i, 0, i + 1, 0);
      b.link(0, 0, 1, 1);
      b.link(0, 0, 1, -1);
      for (long i = 1; i < n; ++i) {
        b.link(i, i, i + 1, i + 1);
        b.link(i, -i, i + 1, -(i + 1));
      }
      break;
    }
    case PlanarExample::Ladder: {
      for (long i = -n; i <= 0; ++i) b.add(i, 0, h);
      for (long j = -n + 1; j <= n - 1; ++j) b.add(0, j, h);
      for (long i = 0; i <= n; ++i) {
        b.add(i, n, h);
        b.add(i, -n, h);
      }
      for (long i = -n; i < 0; ++i) b.link(i, 0, i + 1, 0);
      for (long j = -n; j < n; ++j) b.link(0, j, 0, j + 1);
      for (long i = 0; i < n; ++i) {
        b.link(i, n, i + 1, n);
        b.link(i, -n, i + 1, -n);
      }
      break;
    }
    default:
      throw DomainError("sample_planar_example: unknown example");
  }
  std::vector<Vec> values;
  for (const auto& p : b.pos) values.push_back(p.head(1));
  DiscretizedSpace x(1, std::move(values), std::move(b.edges), h);
  x.set_positions(std::move(b.pos));
  if (!frontier.empty()) x.set_frontier(std::move(frontier));
  return x;
}

HypothesisReport check_local_global(const DiscretizedSpace& x, const HypothesisParams& params) {
  HypothesisReport out;
  const auto& fr = x.frontier();
  out.proper = std::none_of(fr.begin(), fr.end(), [](bool f) { return f; });
  const double h = x.mesh_h();
  const double level_tol = params.level_factor * h;
  const double delta = params.delta_factor * h;
  const double attain = params.attain_factor * h;

  // Hop distance to the frontier. Near an unattained edge the openness radius
  // shrinks below the mesh, so those probes are not resolved by the sample.
  std::vector<int> to_frontier(static_cast<std::size_t>(x.size()), -1);
  {
    std::queue<int> q;
    for (int v = 0; v < x.size(); ++v)
      if (!fr.empty() && fr[static_cast<std::size_t>(v)]) {
        to_frontier[static_cast<std::size_t>(v)] = 0;
        q.push(v);
      }
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int w : x.neighbors(u))
        if (to_frontier[static_cast<std::size_t>(w)] < 0) {
          to_frontier[static_cast<std::size_t>(w)] = to_frontier[static_cast<std::size_t>(u)] + 1;
          q.push(w);
        }
    }
  }
  const auto resolved = [&](int u) {
    const int d = to_frontier[static_cast<std::size_t>(u)];
    return d < 0 || d > params.probe_radius;
  };

  for (int v = 0; v < x.size(); ++v) {
    const std::vector<int> u_list = ball(x, v, params.neighborhood_radius);
    std::vector<bool> in_u(static_cast<std::size_t>(x.size()), false);
    for (int u : u_list) in_u[static_cast<std::size_t>(u)] = true;
    const std::vector<Vec> image = distinct_values(x, u_list, level_tol);

    if (out.locally_convex) {
      for (const auto& mu : image) {
        std::vector<bool> band(static_cast<std::size_t>(x.size()), false);
        for (int u : u_list) band[static_cast<std::size_t>(u)] = (x.value(u) - mu).norm() <= level_tol;
        if (connected_components(x, band).count > 1) {
          out.locally_convex = false;
          out.convexity_witness = v;
          break;
        }
      }
    }
    if (out.locally_open) {
      // Probes stay far enough inside U that their probe balls do too.
      const int depth = std::max(0, params.neighborhood_radius - params.probe_radius);
      for (int u : ball(x, v, depth)) {
        if (!resolved(u)) continue;
        const std::vector<int> near = ball(x, u, params.probe_radius, &in_u);
        bool ok = true;
        for (const auto& t : image) {
          if ((t - x.value(u)).norm() > delta) continue;
          bool hit = false;
          for (int w : near)
            if ((x.value(w) - t).norm() <= attain) {
              hit = true;
              break;
            }
          if (!hit) {
            ok = false;
            break;
          }
        }
        if (!ok) {
          out.locally_open = false;
          out.openness_witness = u;
          break;
        }
      }
    }
    if (!out.locally_convex && !out.locally_open) break;
  }

  std::vector<int> all(static_cast<std::size_t>(x.size()));
  for (int v = 0; v < x.size(); ++v) all[static_cast<std::size_t>(v)] = v;
  for (const auto& mu : distinct_values(x, all, level_tol)) {
    LevelQuery q{mu, level_tol};
    if (connected_components(x, level_band(x, q, LevelMode::Direct)).count > 1) {
      out.globally_convex = false;
      break;
    }
  }
  return out;
}

DiscretizedSpace sample_arc(double t0, double t1, int samples) {
  if (samples < 2) throw DomainError("sample_arc: need at least two samples");
  if (!(t1 >= t0)) throw DomainError("sample_arc: t1 must not precede t0");
  std::vector<Vec> values;
  std::vector<Edge> edges;
  for (int i = 0; i < samples; ++i) {
    const double t = i + 1 == samples ? t1 : t0 + (t1 - t0) * i / (samples - 1);
    Vec v(2);
    v << std::cos(t), std::sin(t);
    values.push_back(v);
    if (i > 0) edges.emplace_back(i - 1, i);
  }
  return DiscretizedSpace(2, std::move(values), std::move(edges), (t1 - t0) / (samples - 1));
}

DiscretizedSpace sample_sphere_inclusion(int n, int rings) {
  if (n < 2) throw DimensionError("sample_sphere_inclusion: n must be at least 2");
  PointGraph g = sphere_grid(n - 1, rings);
  return DiscretizedSpace(n, std::move(g.points), std::move(g.edges), g.step);
}

}  // namespace mcone
