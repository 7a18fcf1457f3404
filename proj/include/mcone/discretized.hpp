#pragma once

#include "mcone/common.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mcone {

using Edge = std::pair<int, int>;

/// Finite graph approximation of a compact space X together with the
/// values of a map phi: X -> R^n at every vertex. Vertices are 0..size()-1.
///
/// mesh_h() is the larger of the longest edge in value space and the
/// declared geometric step of the sampler.
class DiscretizedSpace {
 public:
  DiscretizedSpace() = default;
  DiscretizedSpace(int dim, std::vector<Vec> values, std::vector<Edge> edges, double declared_step = 0.0);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }
  const std::vector<Vec>& values() const { return values_; }
  const Vec& value(int v) const { return values_[static_cast<std::size_t>(v)]; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const int> neighbors(int v) const {
    const auto b = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(v)]);
    const auto e = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(v) + 1]);
    return {adjacency_.data() + b, e - b};
  }
  double mesh_h() const { return mesh_h_; }
  double declared_step() const { return declared_step_; }

  /// Optional ambient coordinates of the samples (used by planar examples).
  const std::vector<Vec>& positions() const { return positions_; }
  void set_positions(std::vector<Vec> p);

  /// Samples adjacent to a limit point that the sampled space is missing.
  /// A nonempty frontier means the underlying map is not proper.
  const std::vector<bool>& frontier() const { return frontier_; }
  void set_frontier(std::vector<bool> f);

  /// Induced subgraph on the kept vertices; `kept` receives the original
  /// index of every surviving vertex.
  DiscretizedSpace induced(const std::vector<bool>& keep, std::vector<int>* kept = nullptr) const;

 private:
  int dim_ = 1;
  std::vector<Vec> values_;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<int> adjacency_;
  std::vector<Vec> positions_;
  std::vector<bool> frontier_;
  double declared_step_ = 0.0;
  double mesh_h_ = 0.0;
};

/// Values below this norm count as zero when directions psi = phi/|phi|
/// are formed.
inline constexpr double kZeroValue = 1e-9;

}  // namespace mcone

namespace mcone {

/// Sample points and edges of a unit sphere, before any map is attached.
struct PointGraph {
  std::vector<Vec> points;
  std::vector<Edge> edges;
  double step = 0.0;  // angular spacing between consecutive rings
};

/// Unit sphere S^d in R^{d+1}, built by suspension: S^0 is {-1, +1}; S^d
/// has rings at polar angles j*pi/rings (copies of the S^{d-1} grid scaled
/// by sin) joined to each other and to the two poles on the last axis.
/// With `upper_half`, only the closed hemisphere x_d >= 0 is kept (rings
/// must then be even so the equator is sampled).
PointGraph sphere_grid(int d, int rings, bool upper_half = false);

}  // namespace mcone
