#pragma once

#include "mcone/common.hpp"

#include <vector>

namespace mcone {

/// Closed half-space {x : <normal, x> >= 0} bounded by a hyperplane through
/// the origin. The normal is unit length.
struct HalfSpace {
  Vec normal;
};

/// Convex polyhedral cone with vertex at the origin, kept in both generator
/// and half-space form.
///
/// Generators are the extreme rays plus, for a cone with lineality, both
/// signs of an orthonormal lineality basis. Half-spaces are the facet
/// normals plus, for a lower-dimensional cone, both signs of an orthonormal
/// basis of the orthogonal complement of its span (equalities as opposite
/// pairs). Both lists are unit vectors in a canonical order.
class PolyCone {
 public:
  /// The cone {0} in R^dim.
  static PolyCone trivial(int dim);
  /// All of R^dim.
  static PolyCone whole_space(int dim);

  int ambient_dim() const { return dim_; }
  const std::vector<Vec>& generators() const { return generators_; }
  const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }

  bool is_whole_space() const { return halfspaces_.empty(); }
  bool is_trivial() const { return generators_.empty(); }

  /// Membership through the half-space form.
  bool contains(const Vec& v, double tol = kDefaultTol) const;
  /// Membership through the generator form: a nonnegative combination of
  /// the generators within tol of v exists.
  bool contains_by_generators(const Vec& v, double tol = kDefaultTol) const;

  /// Builds a cone from already-canonical parts. Used by deserialization
  /// after validation; library code goes through cone_from_generators.
  static PolyCone from_parts(int dim, std::vector<Vec> generators, std::vector<HalfSpace> halfspaces);

 private:
  int dim_ = 1;
  std::vector<Vec> generators_;
  std::vector<HalfSpace> halfspaces_;
};

/// Extreme rays and lineality basis of {y : <a_i, y> >= 0 for all i}.
struct RayFrame {
  std::vector<Vec> rays;
  std::vector<Vec> lineality;
};

/// Incremental double description. `normals` need not be normalized.
RayFrame enumerate_extreme_rays(const std::vector<Vec>& normals, int dim, double tol = kDefaultTol);

/// Conic hull of vs. dim is required when vs is empty; the empty set
/// yields the trivial cone {0}.
PolyCone cone_from_generators(const std::vector<Vec>& vs, int dim = -1, double tol = kDefaultTol);

/// Cone cut out by half-spaces through the origin.
PolyCone cone_from_halfspaces(const std::vector<HalfSpace>& hs, int dim, double tol = kDefaultTol);

bool contains(const PolyCone& c, const Vec& v, double tol = kDefaultTol);

PolyCone intersect_halfspace(const PolyCone& c, const HalfSpace& h, double tol = kDefaultTol);

/// True iff the generators span a subspace of dimension at most two.
bool is_contained_in_2d_subspace(const PolyCone& c, double tol = kDefaultTol);

/// The local-model cone {sum s_j w_j + nu : s_j >= 0, nu in span(h0_basis)}.
/// Throws ExactnessError when base is not in span(h0_basis).
PolyCone model_cone(const std::vector<Vec>& weights, const std::vector<Vec>& h0_basis, const Vec& base,
                    double tol = kDefaultTol);

/// True iff v lies in span(basis) within tol * max(1, |v|).
bool in_span(const std::vector<Vec>& basis, const Vec& v, double tol = kDefaultTol);

inline constexpr int kMaxConeDim = 8;

}  // namespace mcone
