#pragma once

#include "mcone/cones.hpp"
#include "mcone/discretized.hpp"
#include "mcone/localglobal.hpp"

#include <complex>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace mcone {

class ContactExample;

/// S^{2n-1} with the Hopf circle action (orientation +1) or the opposite
/// action (-1). Psi_alpha(x) = orientation * |x|^2 / 2.
struct HopfSphere {
  int n = 1;
  int orientation = 1;
};

/// T^k x (R^k \ {0}) with the subtorus T^{k-1} acting; Psi(a, x) is the
/// first k-1 coordinates of x.
struct CotangentTorusComplement {
  int k = 3;
};

/// The previous example cut along the last acting circle: the image is the
/// closed half-space where coordinate k-1 is nonnegative.
struct CutCotangentTorus {
  int k = 3;
};

/// R/(2 pi n Z) x T^2 with alpha = cos t dtheta1 + sin t dtheta2.
struct Mn {
  int n = 1;
  int fiber = 4;  // torus fiber samples per circle
};

/// [a, b] x T^2 with boundary circles collapsed, b = b_prime + 2 pi k.
struct MInterval {
  double a = 0.0;
  double b_prime = kPi / 2;
  int k = 0;
  int fiber = 4;
  double b() const { return b_prime + 2.0 * kPi * k; }
};

/// The action restricted to the first circle factor: Psi composed with
/// (x, y) -> x.
struct CircleRestriction {
  std::shared_ptr<const ContactExample> inner;
};

class ContactExample {
 public:
  using Family = std::variant<HopfSphere, CotangentTorusComplement, CutCotangentTorus, Mn, MInterval, CircleRestriction>;

  static ContactExample hopf(int n, int orientation = 1);
  static ContactExample complement(int k);
  static ContactExample cut(int k);
  static ContactExample mn(int n, int fiber = 4);
  /// Throws DomainError unless b > a and both cut angles have rational
  /// slope (a primitive integer circle of small height collapses there).
  static ContactExample interval(double a, double b_prime, int k = 0, int fiber = 4);
  static ContactExample restrict_to_circle(const ContactExample& inner);

  const Family& family() const { return family_; }
  /// Momentum values live in R^value_dim().
  int value_dim() const;
  std::string name() const;
  /// Ordered (name, value) parameter list.
  std::vector<std::pair<std::string, double>> params() const;

 private:
  explicit ContactExample(Family f) : family_(std::move(f)) {}
  Family family_;
};

/// Primitive integer direction parallel to (-sin t, cos t): the circle that
/// collapses at a cut at angle t. Throws DomainError when tan t is not a
/// ratio of integers of absolute value at most 64.
std::pair<int, int> collapse_direction(double t);

/// Closed-form Psi_alpha at a point in the family's coordinates:
/// Hopf: x in R^{2n}; complement and cut: x in R^k (nonzero, the cut needs
/// x_{k-1} >= 0); Mn: (t) or (t, theta1, theta2); MInterval: t in [a, b];
/// restriction: the inner family's coordinates.
Vec psi_alpha(const ContactExample& ex, const Vec& point);

struct SampleOptions {
  /// Radial layers for the complement and cut families: 1 samples the
  /// unit sphere; more samples the shell 0.25 <= |x| <= 4 geometrically.
  int shell_layers = 1;
};

/// Graph sample of the family with Psi_alpha values. resolution >= 16.
DiscretizedSpace sample(const ContactExample& ex, int resolution, const SampleOptions& opts = {});

/// The contact cut of Mn (or of an interval example) at [a, b].
ContactExample contact_cut(const ContactExample& ex, double a, double b);

/// Image cone of the cut at [a, b] in the plane: R^2 cut by the two
/// half-spaces when b - a <= pi; otherwise the whole plane (conic hull).
PolyCone cut_cone(double a, double b);

/// Closed-form image of the conified momentum map.
std::string symbolic_image(const ContactExample& ex);

/// Tag for a sampled one-dimensional image: "R", "x>=0" for [0, inf),
/// "x>0" for (0, inf), "x<=0", "x<0", "{0}" or "" (empty). The tags contain
/// no commas so they can sit in CSV cells unquoted.
std::string image_tag_1d(const DiscretizedSpace& x);

/// Normal-form data at a point: weights eta_j, a basis of the annihilator
/// h0 and the base value Phi(q).
struct LocalModel {
  std::vector<Vec> weights;
  std::vector<Vec> h0_basis;
  Vec base;
};

/// Phi(q) + sum |z_j|^2 / 2 eta_j + nu. Throws ExactnessError when nu is
/// not in span(h0_basis).
Vec model_momentum(const LocalModel& m, const std::vector<std::complex<double>>& z, const Vec& nu);

/// True iff base lies in span(h0_basis) within 1e-9.
bool exactness_check(const LocalModel& m);

PolyCone model_cone(const LocalModel& m);

struct LevelEntry {
  Vec mu;
  int count = 0;
};

struct AnalysisReport {
  std::string family;
  std::vector<std::pair<std::string, double>> params;
  int resolution = 0;
  int vertices = 0;
  double mesh_h = 0.0;
  PolyCone momentum_cone;  // conic hull of the sampled values
  std::string image_description;
  std::string sampled_image;  // one-dimensional values only
  bool c1 = false;
  bool c2 = false;
  bool c3 = false;
  std::vector<LevelEntry> levels;
  std::vector<std::string> notes;
};

/// Probe levels: the standard set for the value dimension plus up to
/// max_directions sampled directions.
std::vector<Vec> probe_levels(const DiscretizedSpace& x, int max_directions = 64);

/// Samples the family and computes the three verdicts: c1 convexity of the
/// momentum cone, c2 connectedness of the nonzero probe levels, c3
/// openness onto the image. Deterministic in (ex, resolution).
AnalysisReport analyze(const ContactExample& ex, int resolution, const SampleOptions& opts = {});

}  // namespace mcone
