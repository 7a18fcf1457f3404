#include "mcone/localglobal.hpp"

#include "mcone/spherical.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <random>

namespace mcone {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int v) {
    while (parent_[static_cast<std::size_t>(v)] != v) {
      parent_[static_cast<std::size_t>(v)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(v)])];
      v = parent_[static_cast<std::size_t>(v)];
    }
    return v;
  }
  // The smaller root wins, so roots are component minima.
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b)
      parent_[static_cast<std::size_t>(b)] = a;
    else
      parent_[static_cast<std::size_t>(a)] = b;
  }

 private:
  std::vector<int> parent_;
};

// Angle between unit vectors; accurate for nearly equal and nearly opposite pairs.
double safe_angle(const Vec& a, const Vec& b) { return 2.0 * std::atan2((a - b).norm(), (a + b).norm()); }

struct Directions {
  std::vector<Vec> psi;         // per vertex (zero vector when phi = 0)
  std::vector<bool> nonzero;
  std::vector<int> cls;         // direction class per vertex, -1 when phi = 0
  std::vector<Vec> classes;     // distinct directions
};

Directions directions_of(const DiscretizedSpace& x) {
  Directions d;
  const auto n = static_cast<std::size_t>(x.size());
  d.psi.resize(n);
  d.nonzero.resize(n);
  d.cls.assign(n, -1);
  std::map<std::vector<long long>, int> index;
  for (std::size_t v = 0; v < n; ++v) {
    const Vec& phi = x.value(static_cast<int>(v));
    const double r = phi.norm();
    d.nonzero[v] = r > kZeroValue;
    if (!d.nonzero[v]) {
      d.psi[v] = Vec::Zero(x.dim());
      continue;
    }
    d.psi[v] = phi / r;
    std::vector<long long> key(static_cast<std::size_t>(x.dim()));
    for (int i = 0; i < x.dim(); ++i) key[static_cast<std::size_t>(i)] = std::llround(d.psi[v](i) * 1e9);
    const auto [it, inserted] = index.emplace(std::move(key), static_cast<int>(d.classes.size()));
    if (inserted) d.classes.push_back(d.psi[v]);
    d.cls[v] = it->second;
  }
  return d;
}

double mesh_angle(const DiscretizedSpace& x, const Directions& d, double min_norm = kZeroValue) {
  double m = 0.0;
  for (const auto& [a, b] : x.edges()) {
    if (!d.nonzero[static_cast<std::size_t>(a)] || !d.nonzero[static_cast<std::size_t>(b)]) continue;
    if (x.value(a).norm() < min_norm || x.value(b).norm() < min_norm) continue;
    const double ang = safe_angle(d.psi[static_cast<std::size_t>(a)], d.psi[static_cast<std::size_t>(b)]);
    if (ang < kPi / 2) m = std::max(m, ang);
  }
  return m;
}

std::vector<int> graph_ball(const DiscretizedSpace& x, int v, int radius) {
  std::vector<int> out{v};
  std::map<int, int> depth{{v, 0}};
  std::queue<int> q;
  q.push(v);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    const int du = depth[u];
    if (du == radius) continue;
    for (int w : x.neighbors(u)) {
      if (depth.emplace(w, du + 1).second) {
        out.push_back(w);
        q.push(w);
      }
    }
  }
  return out;
}

// Vertices within d_psi <= radius of v, reached in at most hop_cap edges.
std::vector<int> psi_ball(const DiscretizedSpace& x, const Directions& d, int v, double radius, int hop_cap) {
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  std::map<int, std::pair<double, int>> best;  // vertex -> (dist, hops)
  best[v] = {0.0, 0};
  pq.emplace(0.0, v);
  std::vector<int> out;
  while (!pq.empty()) {
    const auto [dist, u] = pq.top();
    pq.pop();
    const auto [bd, hops] = best[u];
    if (dist > bd) continue;
    out.push_back(u);
    if (hops >= hop_cap) continue;
    for (int w : x.neighbors(u)) {
      if (!d.nonzero[static_cast<std::size_t>(w)]) continue;
      const double nd = dist + safe_angle(d.psi[static_cast<std::size_t>(u)], d.psi[static_cast<std::size_t>(w)]);
      if (nd > radius) continue;
      auto it = best.find(w);
      if (it == best.end() || nd < it->second.first) {
        best[w] = {nd, hops + 1};
        pq.emplace(nd, w);
      }
    }
  }
  return out;
}

}  // namespace

Components connected_components(const DiscretizedSpace& x, const std::vector<bool>& subset) {
  if (static_cast<int>(subset.size()) != x.size()) throw DimensionError("connected_components: mask size mismatch");
  UnionFind uf(x.size());
  for (const auto& [a, b] : x.edges())
    if (subset[static_cast<std::size_t>(a)] && subset[static_cast<std::size_t>(b)]) uf.unite(a, b);
  Components c;
  c.label.assign(static_cast<std::size_t>(x.size()), -1);
  for (int v = 0; v < x.size(); ++v) {
    if (!subset[static_cast<std::size_t>(v)]) continue;
    const int r = uf.find(v);
    c.label[static_cast<std::size_t>(v)] = r;
    if (r == v) ++c.count;
  }
  return c;
}

Components connected_components(const DiscretizedSpace& x, const std::function<bool(int)>& subset) {
  std::vector<bool> mask(static_cast<std::size_t>(x.size()));
  for (int v = 0; v < x.size(); ++v) mask[static_cast<std::size_t>(v)] = subset(v);
  return connected_components(x, mask);
}

std::vector<bool> level_band(const DiscretizedSpace& x, const LevelQuery& q, LevelMode mode) {
  if (q.mu.size() != x.dim()) throw DimensionError("level_band: level dimension mismatch");
  if (!(q.tol > 0.0)) throw DomainError("level_band: tolerance must be positive");
  std::vector<bool> band(static_cast<std::size_t>(x.size()), false);
  const double mu_norm = q.mu.norm();
  for (int v = 0; v < x.size(); ++v) {
    const Vec& phi = x.value(v);
    bool in = false;
    if (mode == LevelMode::Direct) {
      in = (phi - q.mu).norm() <= q.tol;
    } else if (mu_norm == 0.0) {
      in = phi.norm() <= q.tol;
    } else {
      const double r = phi.norm();
      if (r > kZeroValue) {
        const Vec dir = phi / r;
        const double along = q.mu.dot(dir);
        const double dist = along >= 0.0 ? (q.mu - along * dir).norm() : mu_norm;
        in = dist <= q.tol;
      }
    }
    band[static_cast<std::size_t>(v)] = in;
  }
  return band;
}

int level_component_count(const DiscretizedSpace& x, const LevelQuery& q, LevelMode mode) {
  if (q.tol < 2.0 * x.mesh_h() * (1.0 - 1e-12))
    throw DomainError("level_component_count: tolerance must be at least twice the mesh size");
  return connected_components(x, level_band(x, q, mode)).count;
}

GraphPath d_psi_shortest_path(const DiscretizedSpace& x, int x0, int x1) {
  if (x0 < 0 || x1 < 0 || x0 >= x.size() || x1 >= x.size()) throw DomainError("d_psi_shortest_path: no such vertex");
  const Directions d = directions_of(x);
  if (!d.nonzero[static_cast<std::size_t>(x0)] || !d.nonzero[static_cast<std::size_t>(x1)])
    throw DomainError("d_psi_shortest_path: endpoint value vanishes");
  std::vector<double> dist(static_cast<std::size_t>(x.size()), kInf);
  std::vector<int> parent(static_cast<std::size_t>(x.size()), -1);
  // Parents are always settled vertices, so zero-length edges cannot close
  // a cycle of parent pointers.
  std::vector<bool> settled(static_cast<std::size_t>(x.size()), false);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[static_cast<std::size_t>(x0)] = 0.0;
  pq.emplace(0.0, x0);
  while (!pq.empty()) {
    const auto [du, u] = pq.top();
    pq.pop();
    if (settled[static_cast<std::size_t>(u)]) continue;
    settled[static_cast<std::size_t>(u)] = true;
    if (u == x1) break;
    for (int w : x.neighbors(u)) {
      if (!d.nonzero[static_cast<std::size_t>(w)] || settled[static_cast<std::size_t>(w)]) continue;
      const double nd = du + safe_angle(d.psi[static_cast<std::size_t>(u)], d.psi[static_cast<std::size_t>(w)]);
      auto& dw = dist[static_cast<std::size_t>(w)];
      if (nd < dw || (nd == dw && u < parent[static_cast<std::size_t>(w)])) {
        dw = nd;
        parent[static_cast<std::size_t>(w)] = u;
        pq.emplace(nd, w);
      }
    }
  }
  if (dist[static_cast<std::size_t>(x1)] == kInf)
    throw DomainError("d_psi_shortest_path: endpoints lie in different components");
  GraphPath out;
  out.length = dist[static_cast<std::size_t>(x1)];
  for (int v = x1; v != -1; v = parent[static_cast<std::size_t>(v)]) out.vertices.push_back(v);
  std::reverse(out.vertices.begin(), out.vertices.end());
  return out;
}

bool monotone_geodesic_check(const DiscretizedSpace& x, const std::vector<int>& path, double tol) {
  if (tol < 0.0) tol = x.mesh_h();
  std::vector<Vec> pts;
  for (int v : path) {
    if (v < 0 || v >= x.size()) throw DomainError("monotone_geodesic_check: no such vertex");
    pts.push_back(x.value(v));
  }
  if (pts.empty()) return true;
  return is_weakly_monotone_geodesic(radialize(pts), tol);
}

DiscretizedSpace excise(const DiscretizedSpace& x, double eps, std::vector<int>* kept) {
  if (!(eps > 0.0)) throw DomainError("excise: eps must be positive");
  std::vector<bool> keep(static_cast<std::size_t>(x.size()));
  for (int v = 0; v < x.size(); ++v) keep[static_cast<std::size_t>(v)] = x.value(v).norm() >= eps;
  return x.induced(keep, kept);
}

bool is_weakly_monotone_straight(const std::vector<Vec>& path, double tol) {
  if (path.size() <= 2) return true;
  const Vec& a = path.front();
  const Vec dir = path.back() - a;
  const double len = dir.norm();
  if (len <= tol) {
    for (const auto& p : path)
      if ((p - a).norm() > tol) return false;
    return true;
  }
  const Vec u = dir / len;
  double prev = -kInf;
  for (const auto& p : path) {
    const double t = (p - a).dot(u);
    if (t < -tol || t > len + tol) return false;
    if ((p - a - t * u).norm() > tol) return false;
    if (t < prev - tol) return false;
    prev = std::max(prev, t);
  }
  return true;
}

ConifiedPath conify_path(const std::vector<Vec>& phi, double lambda0, double lambda1, double tol) {
  if (phi.empty()) throw DomainError("conify_path: empty path");
  if (!(lambda0 > 0.0) || !(lambda1 > 0.0)) throw DomainError("conify_path: scales must be positive");
  const double scale = std::max(1.0, std::max(phi.front().norm(), phi.back().norm()));
  if (!is_weakly_monotone_straight(phi, tol * scale)) throw DomainError("conify_path: input is not weakly monotone straight");
  ConifiedPath out;
  const Vec& p0 = phi.front();
  const Vec& p1 = phi.back();
  const Vec dir = p1 - p0;
  const double len2 = dir.squaredNorm();
  const std::size_t n = phi.size();
  for (std::size_t i = 0; i < n; ++i) {
    double s;
    if (len2 <= tol * tol * scale * scale) {
      s = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
    } else {
      s = std::clamp((phi[i] - p0).dot(dir) / len2, 0.0, 1.0);
    }
    if (!out.s.empty()) s = std::max(s, out.s.back());
    if (i == 0) s = 0.0;
    if (i + 1 == n && n > 1) s = 1.0;
    const double denom = (1.0 - s) / lambda0 + s / lambda1;
    const double lambda = 1.0 / denom;
    const double st = (s / lambda1) / denom;
    out.s.push_back(s);
    out.lambda.push_back(lambda);
    out.s_tilde.push_back(st);
    // Evaluate on the segment itself so the output is straight to rounding.
    out.points.push_back((1.0 - st) * lambda0 * p0 + st * lambda1 * p1);
  }
  return out;
}

double angular_mesh(const DiscretizedSpace& x, double min_norm) { return mesh_angle(x, directions_of(x), min_norm); }

std::vector<Vec> distinct_directions(const DiscretizedSpace& x) { return directions_of(x).classes; }

OpennessVerdict openness_verdict(const DiscretizedSpace& x, const OpennessParams& params) {
  OpennessVerdict out;
  if (x.empty()) return out;
  const Directions d = directions_of(x);
  double max_norm = 0.0;
  for (const auto& v : x.values()) max_norm = std::max(max_norm, v.norm());
  const double far = std::min(params.near_zero_factor * x.mesh_h(), 0.25 * max_norm);
  double mesh_ang = mesh_angle(x, d, far);
  if (mesh_ang <= 0.0) mesh_ang = mesh_angle(x, d);
  mesh_ang = std::max(mesh_ang, 1e-9);
  const double delta = params.delta_factor * mesh_ang;
  const double attain = params.attain_factor * mesh_ang;
  const double zero_attain = params.zero_attain_factor * mesh_ang;
  const double cos_delta = std::cos(delta);
  const double cos_attain = std::cos(attain);
  const double cos_zero_attain = std::cos(zero_attain);
  const int zero_radius = static_cast<int>(std::ceil(params.delta_factor)) + 2;
  const std::size_t nclass = d.classes.size();

  // Targets per direction class: the sampled directions near it that are
  // not already within the attainment tolerance of the class itself.
  std::vector<std::vector<int>> targets(nclass);
  detail::parallel_for(nclass, [&](std::size_t c) {
    for (std::size_t o = 0; o < nclass; ++o) {
      const double dot = d.classes[c].dot(d.classes[o]);
      if (dot >= cos_delta && dot < cos_attain) targets[c].push_back(static_cast<int>(o));
    }
  });

  std::vector<int> failed_target(static_cast<std::size_t>(x.size()), -1);
  detail::parallel_for(static_cast<std::size_t>(x.size()), [&](std::size_t vi) {
    const int v = static_cast<int>(vi);
    if (!d.nonzero[vi]) {
      std::vector<int> seen;
      for (int u : graph_ball(x, v, zero_radius))
        if (d.nonzero[static_cast<std::size_t>(u)]) seen.push_back(d.cls[static_cast<std::size_t>(u)]);
      std::sort(seen.begin(), seen.end());
      seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
      for (std::size_t t = 0; t < nclass; ++t) {
        bool hit = false;
        for (int c : seen)
          if (d.classes[t].dot(d.classes[static_cast<std::size_t>(c)]) >= cos_zero_attain) {
            hit = true;
            break;
          }
        if (!hit) {
          failed_target[vi] = static_cast<int>(t);
          return;
        }
      }
      return;
    }
    if (x.value(v).norm() < far) return;
    const auto& tv = targets[static_cast<std::size_t>(d.cls[vi])];
    if (tv.empty()) return;
    std::vector<int> seen;
    for (int u : psi_ball(x, d, v, delta + params.ball_slack_factor * mesh_ang, params.hop_cap))
      seen.push_back(d.cls[static_cast<std::size_t>(u)]);
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    for (int t : tv) {
      bool hit = false;
      for (int c : seen)
        if (d.classes[static_cast<std::size_t>(t)].dot(d.classes[static_cast<std::size_t>(c)]) >= cos_attain) {
          hit = true;
          break;
        }
      if (!hit) {
        failed_target[vi] = t;
        return;
      }
    }
  });
  out.probes = x.size();
  for (int v = 0; v < x.size(); ++v) {
    if (failed_target[static_cast<std::size_t>(v)] >= 0) {
      out.open = false;
      out.witness_vertex = v;
      out.witness_target = d.classes[static_cast<std::size_t>(failed_target[static_cast<std::size_t>(v)])];
      break;
    }
  }
  return out;
}

ConvexityVerdict convexity_verdict(const DiscretizedSpace& x, std::uint64_t seed) {
  ConvexityVerdict out;
  const Directions d = directions_of(x);
  out.cone = d.classes.empty() ? PolyCone::trivial(x.dim()) : cone_from_generators(d.classes, x.dim());
  for (const auto& v : x.values()) {
    if (!out.cone.contains(v, 1e-7 * std::max(1.0, v.norm()))) {
      out.convex = false;
      out.reason = "sampled value outside the computed cone";
      return out;
    }
  }
  if (x.dim() == 1 || d.classes.size() <= 1) return out;
  double max_norm = 0.0;
  for (const auto& v : x.values()) max_norm = std::max(max_norm, v.norm());
  double mesh_ang = mesh_angle(x, d, std::min(4.0 * x.mesh_h(), 0.25 * max_norm));
  if (mesh_ang <= 0.0) mesh_ang = mesh_angle(x, d);
  mesh_ang = std::max(mesh_ang, 1e-9);
  const double gap_ok = 4.0 * mesh_ang;

  if (x.dim() == 2) {
    std::vector<double> ang;
    for (const auto& c : d.classes) ang.push_back(std::atan2(c(1), c(0)));
    std::sort(ang.begin(), ang.end());
    std::vector<double> gaps;
    for (std::size_t i = 1; i < ang.size(); ++i) gaps.push_back(ang[i] - ang[i - 1]);
    gaps.push_back(ang.front() + 2.0 * kPi - ang.back());
    std::sort(gaps.begin(), gaps.end());
    const double largest = gaps.back();
    const double second = gaps.size() > 1 ? gaps[gaps.size() - 2] : 0.0;
    if (largest <= gap_ok) return out;  // directions close up: the cone is R^2
    if (second > gap_ok) {
      out.convex = false;
      out.reason = "sampled directions form more than one arc";
      return out;
    }
    if (largest < kPi - 1e-9) {
      out.convex = false;
      out.reason = "angular extent strictly between pi and 2 pi";
    }
    return out;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, d.classes.size() - 1);
  const double cos_gap = std::cos(gap_ok);
  const int pairs = 400;
  for (int i = 0; i < pairs; ++i) {
    const Vec& a = d.classes[pick(rng)];
    const Vec& b = d.classes[pick(rng)];
    const Vec mid = a + b;
    if (mid.norm() < 1e-6) continue;
    const Vec m = mid.normalized();
    bool hit = false;
    for (const auto& c : d.classes)
      if (c.dot(m) >= cos_gap) {
        hit = true;
        break;
      }
    if (!hit) {
      out.convex = false;
      out.reason = "midpoint direction of two sampled directions is not sampled";
      return out;
    }
  }
  return out;
}

}  // namespace mcone
