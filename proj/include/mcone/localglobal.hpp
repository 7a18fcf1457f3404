#pragma once

#include "mcone/cones.hpp"
#include "mcone/discretized.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace mcone {

struct Components {
  int count = 0;
  /// Per vertex: the smallest vertex id of its component, or -1 when the
  /// vertex is outside the subset.
  std::vector<int> label;
};

/// Components of the subgraph induced on the vertices where subset is true.
Components connected_components(const DiscretizedSpace& x, const std::vector<bool>& subset);
Components connected_components(const DiscretizedSpace& x, const std::function<bool(int)>& subset);

/// How level sets are read off the samples.
///  - Conified: levels of Psi(x, lambda) = lambda * phi(x). A vertex lies on
///    the level of mu != 0 when phi(v) != 0 and mu is within tol of the ray
///    through phi(v); on the zero level when |phi(v)| <= tol.
///  - Direct: levels of phi itself, |phi(v) - mu| <= tol.
enum class LevelMode { Conified, Direct };

struct LevelQuery {
  Vec mu;
  double tol = 0.0;
};

std::vector<bool> level_band(const DiscretizedSpace& x, const LevelQuery& q, LevelMode mode = LevelMode::Conified);

/// Number of components of a level band. Requires q.tol >= 2 * mesh_h;
/// an empty level gives 0.
int level_component_count(const DiscretizedSpace& x, const LevelQuery& q, LevelMode mode = LevelMode::Conified);

struct GraphPath {
  double length = 0.0;
  std::vector<int> vertices;
};

/// Dijkstra in the metric where an edge costs the spherical distance
/// between the directions psi = phi/|phi| of its ends. Vertices with
/// phi = 0 are skipped; ties go to the smaller vertex id.
GraphPath d_psi_shortest_path(const DiscretizedSpace& x, int x0, int x1);

/// The psi-values along a vertex walk form a weakly monotone geodesic,
/// within tol (mesh_h when tol < 0).
bool monotone_geodesic_check(const DiscretizedSpace& x, const std::vector<int>& path, double tol = -1.0);

/// Removes the vertices with |phi| < eps. The result may be empty.
DiscretizedSpace excise(const DiscretizedSpace& x, double eps, std::vector<int>* kept = nullptr);

/// Every point lies within tol of the segment [first, last] and the
/// projections onto that segment are weakly nondecreasing within tol.
bool is_weakly_monotone_straight(const std::vector<Vec>& path, double tol = 1e-9);

struct ConifiedPath {
  std::vector<double> s;        // straight parameter of the input
  std::vector<double> lambda;   // scale factors
  std::vector<double> s_tilde;  // straight parameter of the output
  std::vector<Vec> points;      // lambda(t) * phi(x(t))
};

/// Rescales a weakly monotone straight path phi(x(t)) so that
/// lambda(t) * phi(x(t)) runs straight from lambda0 * phi(x0) to
/// lambda1 * phi(x1). Throws DomainError on non-straight input.
ConifiedPath conify_path(const std::vector<Vec>& phi_values, double lambda0, double lambda1, double tol = 1e-9);

/// Largest angle between the directions at the ends of an edge, over edges
/// with both ends of norm at least min_norm and an angle below pi/2.
double angular_mesh(const DiscretizedSpace& x, double min_norm = kZeroValue);

/// Distinct directions psi(v) over the nonzero vertices, in first-seen order.
std::vector<Vec> distinct_directions(const DiscretizedSpace& x);

struct OpennessParams {
  double delta_factor = 4.0;       // target radius, in angular mesh units
  double attain_factor = 0.6;      // attainment tolerance, nonzero probes
  double zero_attain_factor = 1.0; // attainment tolerance, zero probes
  double ball_slack_factor = 4.0;  // search radius beyond the target radius
  int hop_cap = 64;                // search ball hop limit, nonzero probes
  /// Nonzero probes need |phi| >= min(near_zero_factor * mesh_h,
  /// max|phi| / 4); closer to zero the direction field is too coarse and
  /// the zero probes' balls cover the region instead.
  double near_zero_factor = 4.0;
};

struct OpennessVerdict {
  bool open = true;
  int probes = 0;
  int witness_vertex = -1;
  Vec witness_target;
};

/// Sampled openness of the conified map onto its image. Near a probe with
/// phi != 0 every sampled direction close to psi(probe) must be attained
/// near the probe; at a probe with phi = 0 every sampled direction must be
/// attained within a few edges.
OpennessVerdict openness_verdict(const DiscretizedSpace& x, const OpennessParams& params = {});

struct ConvexityVerdict {
  bool convex = true;
  PolyCone cone;
  std::string reason;
};

/// Convexity of the momentum cone {0} cup R_+ phi(X). In the plane: the
/// sampled directions form one arc that either fits in a half-plane or
/// closes up. In higher dimension: normalized midpoints of sampled
/// direction pairs are again (nearly) sampled directions.
ConvexityVerdict convexity_verdict(const DiscretizedSpace& x, std::uint64_t seed = 0);

}  // namespace mcone
