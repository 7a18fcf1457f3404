#pragma once

#include "mcone/cones.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

namespace mcone {

/// Coefficients s in the open simplex Lambda = {s >= 0, sum s < 1}.
using SimplexPoint = Vec;

/// The linear map L(s) = sum s_j v_j restricted to the open simplex, with
/// the cone L(R_+^n) and the vertex list {0, v_1, ..., v_n} of the closed
/// image polytope.
class SimplexMap {
 public:
  explicit SimplexMap(std::vector<Vec> columns);

  int source_dim() const { return static_cast<int>(columns_.size()); }
  int target_dim() const { return k_; }
  const std::vector<Vec>& columns() const { return columns_; }
  const Mat& matrix() const { return v_; }
  const PolyCone& image_cone() const { return cone_; }
  /// 0 followed by the columns, in column order.
  std::vector<Vec> closed_image_polytope() const;

  Vec apply(const SimplexPoint& s) const;
  /// max(1, largest column norm); absolute tolerances scale with it.
  double scale() const { return scale_; }

 private:
  std::vector<Vec> columns_;
  Mat v_;
  int k_ = 0;
  double scale_ = 1.0;
  PolyCone cone_;
};

inline constexpr double kStrictSlack = 1e-12;

/// True iff s_j >= 0 for all j and sum s_j < 1.
bool in_open_simplex(const SimplexPoint& s, double tol = 0.0);

/// Membership in A = L(Lambda). Strictness is encoded by requiring the
/// cheapest preimage to have coefficient sum at most 1 - kStrictSlack.
bool in_image(const Vec& beta, const SimplexMap& m);

/// Rewrites s so that its support columns are linearly independent while
/// keeping L(s) fixed. Throws DomainError when s is not in Lambda.
SimplexPoint caratheodory_reduce(const SimplexPoint& s, const SimplexMap& m);

struct ExtremalScale {
  double t = 1.0;
  Vec beta_ext;
};

/// t = min{t in (0,1] : beta / t in closure(A)} and beta_ext = beta / t.
ExtremalScale extremal_scale(const Vec& beta, const SimplexMap& m);

/// A continuous right inverse of L on A. sigma(0) = 0.
SimplexPoint section(const Vec& beta, const SimplexMap& m);

/// sigma-bar on the closed polytope conv{0, v_j}.
SimplexPoint closed_section(const Vec& p, const SimplexMap& m);

struct LiftedPath {
  std::vector<SimplexPoint> points;
  /// Path parameter (in [0, 1]) that each lifted point projects to;
  /// weakly nondecreasing.
  std::vector<double> params;
};

/// Lifts a sampled path in A starting at L(x0). Throws PathExitError
/// naming the first sample outside A.
LiftedPath lift_path(const SimplexPoint& x0, const std::vector<Vec>& path, const SimplexMap& m);

struct OpennessResult {
  bool open = true;
  int tested = 0;
  double worst_distance = 0.0;
  std::optional<Vec> witness;
};

/// Distance from s to the nearest x with L(x) = beta, x >= 0, sum x <= 1.
/// Exact, by enumerating active sets; infinity when no such x exists.
double preimage_distance(const SimplexMap& m, const SimplexPoint& s, const Vec& beta);

/// Monte-Carlo check that L(B_r(s) cap Lambda) covers B_delta(L(s)) cap A.
OpennessResult openness_oracle(const SimplexMap& m, const SimplexPoint& s, double r, double delta, int samples,
                               std::uint64_t seed = 0);

/// The same certificate for an arbitrary map: `target` draws an image point
/// near the probe (or nothing, when rejected), `distance` returns the
/// distance from the probe to its nearest preimage.
OpennessResult sampled_openness(const std::function<std::optional<Vec>(std::mt19937_64&)>& target,
                                const std::function<double(const Vec&)>& distance, double r, int samples,
                                std::uint64_t seed = 0);

}  // namespace mcone
