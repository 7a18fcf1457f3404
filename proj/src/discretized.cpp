#include "mcone/discretized.hpp"

#include <algorithm>
#include <cmath>

namespace mcone {

DiscretizedSpace::DiscretizedSpace(int dim, std::vector<Vec> values, std::vector<Edge> edges, double declared_step)
    : dim_(dim), values_(std::move(values)), declared_step_(declared_step) {
  if (dim < 1) throw DimensionError("DiscretizedSpace: value dimension must be at least 1");
  if (!(declared_step >= 0.0) || !std::isfinite(declared_step))
    throw DomainError("DiscretizedSpace: declared step must be finite and nonnegative");
  for (const auto& v : values_) {
    if (v.size() != dim) throw DimensionError("DiscretizedSpace: value dimension mismatch");
    if (!v.allFinite()) throw DomainError("DiscretizedSpace: non-finite value");
  }
  const int n = size();
  // Normalize, drop self-loops and duplicates.
  for (auto& e : edges) {
    if (e.first < 0 || e.second < 0 || e.first >= n || e.second >= n)
      throw DomainError("DiscretizedSpace: edge references a missing vertex");
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges.erase(std::remove_if(edges.begin(), edges.end(), [](const Edge& e) { return e.first == e.second; }),
              edges.end());
  edges_ = std::move(edges);

  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (const auto& [a, b] : edges_) {
    ++degree[static_cast<std::size_t>(a)];
    ++degree[static_cast<std::size_t>(b)];
  }
  offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 0; v < n; ++v)
    offsets_[static_cast<std::size_t>(v) + 1] = offsets_[static_cast<std::size_t>(v)] + degree[static_cast<std::size_t>(v)];
  adjacency_.assign(static_cast<std::size_t>(offsets_.back()), 0);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [a, b] : edges_) {
    adjacency_[static_cast<std::size_t>(fill[static_cast<std::size_t>(a)]++)] = b;
    adjacency_[static_cast<std::size_t>(fill[static_cast<std::size_t>(b)]++)] = a;
  }
  for (int v = 0; v < n; ++v)
    std::sort(adjacency_.begin() + offsets_[static_cast<std::size_t>(v)],
              adjacency_.begin() + offsets_[static_cast<std::size_t>(v) + 1]);

  mesh_h_ = declared_step_;
  for (const auto& [a, b] : edges_) mesh_h_ = std::max(mesh_h_, (value(a) - value(b)).norm());
}

void DiscretizedSpace::set_positions(std::vector<Vec> p) {
  if (!p.empty() && static_cast<int>(p.size()) != size())
    throw DimensionError("DiscretizedSpace: one position per vertex is required");
  positions_ = std::move(p);
}

void DiscretizedSpace::set_frontier(std::vector<bool> f) {
  if (!f.empty() && static_cast<int>(f.size()) != size())
    throw DimensionError("DiscretizedSpace: one frontier flag per vertex is required");
  frontier_ = std::move(f);
}

DiscretizedSpace DiscretizedSpace::induced(const std::vector<bool>& keep, std::vector<int>* kept) const {
  if (static_cast<int>(keep.size()) != size()) throw DimensionError("induced: mask size mismatch");
  std::vector<int> remap(keep.size(), -1);
  std::vector<Vec> vals;
  std::vector<int> origin;
  for (int v = 0; v < size(); ++v) {
    if (!keep[static_cast<std::size_t>(v)]) continue;
    remap[static_cast<std::size_t>(v)] = static_cast<int>(vals.size());
    vals.push_back(value(v));
    origin.push_back(v);
  }
  std::vector<Edge> es;
  for (const auto& [a, b] : edges_) {
    const int ra = remap[static_cast<std::size_t>(a)];
    const int rb = remap[static_cast<std::size_t>(b)];
    if (ra >= 0 && rb >= 0) es.emplace_back(ra, rb);
  }
  DiscretizedSpace out(dim_, std::move(vals), std::move(es), declared_step_);
  if (!positions_.empty()) {
    std::vector<Vec> p;
    for (int v : origin) p.push_back(positions_[static_cast<std::size_t>(v)]);
    out.set_positions(std::move(p));
  }
  if (!frontier_.empty()) {
    std::vector<bool> f;
    for (int v : origin) f.push_back(frontier_[static_cast<std::size_t>(v)]);
    out.set_frontier(std::move(f));
  }
  if (kept) *kept = std::move(origin);
  return out;
}

}  // namespace mcone

namespace mcone {

PointGraph sphere_grid(int d, int rings, bool upper_half) {
  if (d < 0) throw DimensionError("sphere_grid: negative dimension");
  if (rings < 2) throw DomainError("sphere_grid: at least two rings are required");
  if (upper_half && rings % 2 != 0) throw DomainError("sphere_grid: hemisphere needs an even ring count");
  PointGraph g;
  g.step = kPi / rings;
  if (d == 0) {
    if (upper_half) {
      g.points = {Vec::Ones(1)};
    } else {
      g.points = {-Vec::Ones(1), Vec::Ones(1)};
    }
    return g;
  }
  const PointGraph base = sphere_grid(d - 1, rings, false);
  const int nb = static_cast<int>(base.points.size());
  const int last_ring = upper_half ? rings / 2 : rings - 1;
  auto ring_vertex = [&](int j, int b) { return 1 + (j - 1) * nb + b; };

  Vec north = Vec::Zero(d + 1);
  north(d) = 1.0;
  g.points.push_back(north);
  for (int j = 1; j <= last_ring; ++j) {
    const double chi = j * g.step;
    for (const auto& y : base.points) {
      Vec x(d + 1);
      x.head(d) = std::sin(chi) * y;
      x(d) = std::cos(chi);
      g.points.push_back(x);
    }
  }
  for (int j = 1; j <= last_ring; ++j) {
    for (const auto& [a, b] : base.edges) g.edges.emplace_back(ring_vertex(j, a), ring_vertex(j, b));
    if (j < last_ring) {
      for (int b = 0; b < nb; ++b) g.edges.emplace_back(ring_vertex(j, b), ring_vertex(j + 1, b));
      for (const auto& [a, b] : base.edges) {
        g.edges.emplace_back(ring_vertex(j, a), ring_vertex(j + 1, b));
        g.edges.emplace_back(ring_vertex(j, b), ring_vertex(j + 1, a));
      }
    }
  }
  for (int b = 0; b < nb; ++b) g.edges.emplace_back(0, ring_vertex(1, b));
  if (!upper_half) {
    Vec south = -north;
    const int s = static_cast<int>(g.points.size());
    g.points.push_back(south);
    for (int b = 0; b < nb; ++b) g.edges.emplace_back(s, ring_vertex(last_ring, b));
  }
  return g;
}

}  // namespace mcone
