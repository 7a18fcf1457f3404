#pragma once

#include "mcone/discretized.hpp"

namespace mcone {

/// Three planar sets X with Psi = projection to the x-axis, each breaking
/// one hypothesis of the local-to-global principle.
enum class PlanarExample {
  /// {x > 0, |y| <= 1} plus the two points (0, +-1): not proper.
  Strip = 1,
  /// negative x-axis plus the rays y = x and y = -x for x >= 0: not locally
  /// convex at the origin.
  Fork = 2,
  /// negative x-axis, {0} x (-1, 1), and {x >= 0, |y| = 1}: not locally
  /// open near the origin.
  Ladder = 3,
};

/// Samples with spacing 1/per_unit over x in [-1, 1]. Positions carry the
/// planar coordinates; the strip's first column is flagged as frontier.
DiscretizedSpace sample_planar_example(PlanarExample which, int per_unit = 16);

struct HypothesisReport {
  bool proper = true;
  bool locally_convex = true;
  bool locally_open = true;
  bool globally_convex = true;
  int convexity_witness = -1;
  int openness_witness = -1;
};

struct HypothesisParams {
  int neighborhood_radius = 7;  // edges; the neighborhood U of a probe
  int probe_radius = 3;         // edges; where targets must be attained
  double delta_factor = 2.0;    // target radius, in mesh units
  double attain_factor = 0.6;
  double level_factor = 0.5;    // level band half-width, in mesh units
};

/// Checks properness (empty frontier), local convexity (level bands of phi
/// connected inside every neighborhood), local openness (inside every
/// neighborhood, image points near phi(u) are attained near u) and the
/// global conclusion (all level bands connected). Values are read directly,
/// without conification.
HypothesisReport check_local_global(const DiscretizedSpace& x, const HypothesisParams& params = {});

/// t -> (cos t, sin t) on [t0, t1], as a path graph.
DiscretizedSpace sample_arc(double t0, double t1, int samples);

/// The inclusion S^{n-1} -> R^n.
DiscretizedSpace sample_sphere_inclusion(int n, int rings);

}  // namespace mcone
