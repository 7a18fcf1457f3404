#include "mcone/cones.hpp"

#include "mcone/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

namespace mcone {
namespace {

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= (std::uint64_t{1} << (i % 64)); }
  void set_first(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) set(i);
  }
  Bits operator&(const Bits& o) const {
    Bits r;
    r.words_.resize(words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
    return r;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  Vec v;
  Bits zero;
};

void check_dim(int dim) {
  if (dim < 1 || dim > kMaxConeDim)
    throw DimensionError("cone dimension must be in [1, " + std::to_string(kMaxConeDim) + "]");
}

// Modified Gram-Schmidt; drops vectors that become numerically dependent.
std::vector<Vec> orthonormalize(const std::vector<Vec>& vs, double tol) {
  std::vector<Vec> out;
  for (Vec v : vs) {
    for (const auto& q : out) v -= q.dot(v) * q;
    const double n = v.norm();
    if (n > tol) out.push_back(v / n);
  }
  return out;
}

bool lex_less(const Vec& a, const Vec& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const double x = std::round(a(i) * 1e9);
    const double y = std::round(b(i) * 1e9);
    if (x != y) return x > y;
  }
  return false;
}

// Unit, deduplicated copies of the nonzero inputs.
std::vector<Vec> unit_directions(const std::vector<Vec>& vs, double tol) {
  std::vector<Vec> dirs;
  dirs.reserve(vs.size());
  for (const auto& v : vs) {
    const double n = v.norm();
    if (n > tol) dirs.push_back(v / n);
  }
  std::vector<std::size_t> idx(dirs.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](auto i, auto j) { return lex_less(dirs[i], dirs[j]); });
  std::vector<bool> keep(dirs.size(), true);
  for (std::size_t k = 1; k < idx.size(); ++k) {
    // Only neighbors in the sorted order are compared; a missed duplicate
    // costs a redundant constraint, never a wrong answer.
    if ((dirs[idx[k]] - dirs[idx[k - 1]]).norm() < 1e-12) keep[idx[k]] = false;
  }
  std::vector<Vec> out;
  for (std::size_t i = 0; i < dirs.size(); ++i)
    if (keep[i]) out.push_back(dirs[i]);
  return out;
}

// Puts a handful of widely spread directions first so that the incremental
// construction collapses the intermediate cone early.
std::vector<Vec> spread_first(const std::vector<Vec>& dirs, int dim) {
  std::vector<Vec> probes;
  for (int i = 0; i < dim; ++i) {
    probes.push_back(Vec::Unit(dim, i));
    probes.push_back(-Vec::Unit(dim, i));
  }
  probes.push_back(Vec::Ones(dim) / std::sqrt(dim));
  probes.push_back(-Vec::Ones(dim) / std::sqrt(dim));
  std::vector<bool> taken(dirs.size(), false);
  std::vector<Vec> out;
  for (const auto& p : probes) {
    std::size_t best = dirs.size();
    double best_dot = -2.0;
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      const double d = p.dot(dirs[i]);
      if (d > best_dot) {
        best_dot = d;
        best = i;
      }
    }
    if (best < dirs.size() && !taken[best]) {
      taken[best] = true;
      out.push_back(dirs[best]);
    }
  }
  for (std::size_t i = 0; i < dirs.size(); ++i)
    if (!taken[i]) out.push_back(dirs[i]);
  return out;
}

void sort_canonical(std::vector<Vec>& vs) { std::stable_sort(vs.begin(), vs.end(), lex_less); }

std::vector<Vec> dedupe_close(std::vector<Vec> vs, double tol) {
  std::vector<Vec> out;
  for (auto& v : vs) {
    bool dup = false;
    for (const auto& w : out)
      if ((v - w).norm() <= tol) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

RayFrame enumerate_extreme_rays(const std::vector<Vec>& normals, int dim, double tol) {
  check_dim(dim);
  std::vector<Vec> lin;
  for (int i = 0; i < dim; ++i) lin.push_back(Vec::Unit(dim, i));
  std::vector<Ray> rays;
  const std::size_t total = normals.size();
  std::size_t processed = 0;

  for (const auto& raw : normals) {
    if (raw.size() != dim) throw DimensionError("constraint dimension mismatch");
    const double an = raw.norm();
    if (an <= tol) continue;
    const Vec a = raw / an;

    // A constraint that cuts the lineality space turns one lineality
    // direction into a ray.
    int best = -1;
    double best_abs = tol;
    for (std::size_t i = 0; i < lin.size(); ++i) {
      const double d = std::abs(a.dot(lin[i]));
      if (d > best_abs) {
        best_abs = d;
        best = static_cast<int>(i);
      }
    }
    if (best >= 0) {
      Vec pivot = lin[static_cast<std::size_t>(best)];
      double d = a.dot(pivot);
      if (d < 0) {
        pivot = -pivot;
        d = -d;
      }
      std::vector<Vec> rest;
      for (std::size_t i = 0; i < lin.size(); ++i) {
        if (static_cast<int>(i) == best) continue;
        rest.push_back(lin[i] - (a.dot(lin[i]) / d) * pivot);
      }
      lin = orthonormalize(rest, tol);
      for (auto& r : rays) {
        r.v -= (a.dot(r.v) / d) * pivot;
        r.v.normalize();
        r.zero.set(processed);
      }
      Ray fresh{pivot.normalized(), Bits(total)};
      fresh.zero.set_first(processed);
      rays.push_back(std::move(fresh));
      ++processed;
      continue;
    }

    std::vector<double> s(rays.size());
    std::vector<std::size_t> plus, minus, zero;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      s[i] = a.dot(rays[i].v);
      if (s[i] > tol)
        plus.push_back(i);
      else if (s[i] < -tol)
        minus.push_back(i);
      else
        zero.push_back(i);
    }
    if (minus.empty()) {
      for (auto i : zero) rays[i].zero.set(processed);
      ++processed;
      continue;
    }

    const std::size_t need = static_cast<std::size_t>(std::max<int>(0, dim - static_cast<int>(lin.size()) - 2));
    std::vector<Ray> next;
    for (auto i : plus) next.push_back(rays[i]);
    for (auto i : zero) {
      next.push_back(rays[i]);
      next.back().zero.set(processed);
    }
    for (auto p : plus) {
      for (auto q : minus) {
        Bits common = rays[p].zero & rays[q].zero;
        if (common.count() < need) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.subset_of(rays[r].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        Vec w = s[p] * rays[q].v - s[q] * rays[p].v;
        const double wn = w.norm();
        if (wn <= tol) continue;
        common.set(processed);
        next.push_back(Ray{w / wn, std::move(common)});
      }
    }
    rays = std::move(next);
    ++processed;
  }

  RayFrame frame;
  std::vector<Vec> rv;
  for (auto& r : rays) rv.push_back(r.v.normalized());
  frame.rays = dedupe_close(std::move(rv), 1e-9);
  frame.lineality = orthonormalize(lin, tol);
  return frame;
}

PolyCone PolyCone::trivial(int dim) {
  check_dim(dim);
  PolyCone c;
  c.dim_ = dim;
  for (int i = 0; i < dim; ++i) {
    c.halfspaces_.push_back({Vec::Unit(dim, i)});
    c.halfspaces_.push_back({-Vec::Unit(dim, i)});
  }
  return c;
}

PolyCone PolyCone::whole_space(int dim) {
  check_dim(dim);
  PolyCone c;
  c.dim_ = dim;
  for (int i = 0; i < dim; ++i) {
    c.generators_.push_back(Vec::Unit(dim, i));
    c.generators_.push_back(-Vec::Unit(dim, i));
  }
  return c;
}

PolyCone PolyCone::from_parts(int dim, std::vector<Vec> generators, std::vector<HalfSpace> halfspaces) {
  check_dim(dim);
  PolyCone c;
  c.dim_ = dim;
  c.generators_ = std::move(generators);
  c.halfspaces_ = std::move(halfspaces);
  return c;
}

bool PolyCone::contains(const Vec& v, double tol) const {
  if (v.size() != dim_) throw DimensionError("contains: dimension mismatch");
  for (const auto& h : halfspaces_)
    if (h.normal.dot(v) < -tol) return false;
  return true;
}

bool PolyCone::contains_by_generators(const Vec& v, double tol) const {
  if (v.size() != dim_) throw DimensionError("contains_by_generators: dimension mismatch");
  const int g = static_cast<int>(generators_.size());
  // minimize |residual|_1 over c >= 0:  G c + e+ - e- = v.
  lp::Problem p;
  p.A = Mat::Zero(dim_, g + 2 * dim_);
  for (int j = 0; j < g; ++j) p.A.col(j) = generators_[static_cast<std::size_t>(j)];
  p.A.block(0, g, dim_, dim_) = Mat::Identity(dim_, dim_);
  p.A.block(0, g + dim_, dim_, dim_) = -Mat::Identity(dim_, dim_);
  p.b = v;
  p.sense.assign(static_cast<std::size_t>(dim_), lp::Sense::Equal);
  p.objective = Vec::Zero(g + 2 * dim_);
  p.objective.tail(2 * dim_).setConstant(-1.0);
  const auto sol = lp::maximize(p);
  if (sol.status != lp::Status::Optimal) return false;
  return -sol.value <= tol * std::max(1.0, v.lpNorm<1>());
}

PolyCone cone_from_generators(const std::vector<Vec>& vs, int dim, double tol) {
  if (dim < 0) {
    if (vs.empty()) throw DimensionError("cone_from_generators: cannot infer dimension of an empty list");
    dim = static_cast<int>(vs.front().size());
  }
  check_dim(dim);
  for (const auto& v : vs)
    if (v.size() != dim) throw DimensionError("cone_from_generators: generator dimension mismatch");

  const std::vector<Vec> dirs = unit_directions(vs, tol);
  if (dirs.empty()) return PolyCone::trivial(dim);

  // Facets are the extreme rays of the dual cone {y : <g, y> >= 0}.
  const RayFrame dual = enumerate_extreme_rays(spread_first(dirs, dim), dim, tol);
  std::vector<Vec> normals = dual.rays;
  for (const auto& l : dual.lineality) {
    normals.push_back(l);
    normals.push_back(-l);
  }

  const RayFrame primal = enumerate_extreme_rays(normals, dim, tol);
  std::vector<Vec> gens = primal.rays;
  for (const auto& l : primal.lineality) {
    gens.push_back(l);
    gens.push_back(-l);
  }
  sort_canonical(gens);
  sort_canonical(normals);
  std::vector<HalfSpace> hs;
  hs.reserve(normals.size());
  for (auto& n : normals) hs.push_back({std::move(n)});
  return PolyCone::from_parts(dim, std::move(gens), std::move(hs));
}

PolyCone cone_from_halfspaces(const std::vector<HalfSpace>& hs, int dim, double tol) {
  check_dim(dim);
  std::vector<Vec> normals;
  normals.reserve(hs.size());
  for (const auto& h : hs) {
    if (h.normal.size() != dim) throw DimensionError("cone_from_halfspaces: normal dimension mismatch");
    normals.push_back(h.normal);
  }
  const RayFrame frame = enumerate_extreme_rays(normals, dim, tol);
  std::vector<Vec> gens = frame.rays;
  for (const auto& l : frame.lineality) {
    gens.push_back(l);
    gens.push_back(-l);
  }
  return cone_from_generators(gens, dim, tol);
}

bool contains(const PolyCone& c, const Vec& v, double tol) { return c.contains(v, tol); }

PolyCone intersect_halfspace(const PolyCone& c, const HalfSpace& h, double tol) {
  if (h.normal.size() != c.ambient_dim()) throw DimensionError("intersect_halfspace: dimension mismatch");
  std::vector<HalfSpace> hs = c.halfspaces();
  hs.push_back({h.normal.normalized()});
  return cone_from_halfspaces(hs, c.ambient_dim(), tol);
}

bool is_contained_in_2d_subspace(const PolyCone& c, double tol) {
  if (c.generators().empty()) return true;
  return numerical_rank(columns_to_matrix(c.generators(), c.ambient_dim()), tol) <= 2;
}

bool in_span(const std::vector<Vec>& basis, const Vec& v, double tol) {
  const double scale = std::max(1.0, v.norm());
  if (basis.empty()) return v.norm() <= tol * scale;
  const Mat b = columns_to_matrix(basis, static_cast<int>(v.size()));
  const Vec x = b.completeOrthogonalDecomposition().solve(v);
  return (b * x - v).norm() <= tol * scale;
}

PolyCone model_cone(const std::vector<Vec>& weights, const std::vector<Vec>& h0_basis, const Vec& base,
                    double tol) {
  const int dim = static_cast<int>(base.size());
  for (const auto& w : weights)
    if (w.size() != dim) throw DimensionError("model_cone: weight dimension mismatch");
  for (const auto& h : h0_basis)
    if (h.size() != dim) throw DimensionError("model_cone: annihilator basis dimension mismatch");
  if (!in_span(h0_basis, base, tol))
    throw ExactnessError("model_cone: base point is not in the annihilator span (exactness violated)");
  std::vector<Vec> gens = weights;
  for (const auto& h : h0_basis) {
    gens.push_back(h);
    gens.push_back(-h);
  }
  return cone_from_generators(gens, dim, tol);
}

}  // namespace mcone
