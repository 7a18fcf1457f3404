#include "mcone/simplex.hpp"

#include "mcone/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mcone {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Facets of conv{0, v_1, ..., v_n}: rows (c0, c) with c0 + <c, x> >= 0,
// read off the homogenized cone generated by (1, 0) and (1, v_j).
Mat polytope_facets(const std::vector<Vec>& cols, int k) {
  std::vector<Vec> lifted;
  Vec apex = Vec::Zero(k + 1);
  apex(0) = 1.0;
  lifted.push_back(apex);
  for (const auto& v : cols) {
    Vec w(k + 1);
    w(0) = 1.0;
    w.tail(k) = v;
    lifted.push_back(w);
  }
  const PolyCone hom = cone_from_generators(lifted, k + 1);
  Mat f(static_cast<Eigen::Index>(hom.halfspaces().size()), k + 1);
  for (std::size_t i = 0; i < hom.halfspaces().size(); ++i)
    f.row(static_cast<Eigen::Index>(i)) = hom.halfspaces()[i].normal.transpose();
  return f;
}

struct Polytope {
  Mat facets;
  std::vector<Vec> points;  // distinct points among 0, v_1, ..., v_n
  std::vector<SimplexPoint> preimages;
};

Polytope build_polytope(const SimplexMap& m) {
  const double tol = 1e-9 * m.scale();
  const int n = m.source_dim();
  Polytope p;
  p.facets = polytope_facets(m.columns(), m.target_dim());
  p.points.push_back(Vec::Zero(m.target_dim()));
  p.preimages.push_back(SimplexPoint::Zero(n));
  for (int j = 0; j < n; ++j) {
    const Vec& v = m.columns()[static_cast<std::size_t>(j)];
    bool seen = false;
    for (const auto& q : p.points)
      if ((q - v).norm() <= tol) seen = true;
    if (seen) continue;
    p.points.push_back(v);
    p.preimages.push_back(SimplexPoint::Unit(n, j));
  }
  return p;
}

double facet_value(const Mat& f, Eigen::Index i, const Vec& x) {
  return f(i, 0) + f.row(i).tail(x.size()).dot(x);
}

SimplexPoint section_on_face(const Polytope& poly, const Vec& p, std::vector<bool> forced, double tol, int depth) {
  if (depth > static_cast<int>(p.size()) + 2) throw InvariantError("section: face recursion did not terminate");
  const Mat& f = poly.facets;
  const Eigen::Index nf = f.rows();
  std::vector<bool> tight(static_cast<std::size_t>(nf));
  for (Eigen::Index i = 0; i < nf; ++i)
    tight[static_cast<std::size_t>(i)] = forced[static_cast<std::size_t>(i)] || std::abs(facet_value(f, i, p)) <= tol;

  std::vector<std::size_t> face;
  for (std::size_t m = 0; m < poly.points.size(); ++m) {
    bool on = true;
    for (Eigen::Index i = 0; i < nf && on; ++i)
      if (tight[static_cast<std::size_t>(i)] && std::abs(facet_value(f, i, poly.points[m])) > tol) on = false;
    if (on) face.push_back(m);
  }
  if (face.empty()) throw InvariantError("section: point lies outside the closed image polytope");
  if (face.size() == 1) return poly.preimages[face.front()];

  // Barycenter of the face and its preimage.
  Vec q = Vec::Zero(p.size());
  SimplexPoint sq = SimplexPoint::Zero(poly.preimages.front().size());
  for (auto m : face) {
    q += poly.points[m];
    sq += poly.preimages[m];
  }
  q /= static_cast<double>(face.size());
  sq /= static_cast<double>(face.size());

  const Vec d = p - q;
  if (d.norm() <= tol) return sq;

  // Push from q through p to the relative boundary of the face.
  double tau = kInf;
  Eigen::Index binding = -1;
  for (Eigen::Index i = 0; i < nf; ++i) {
    if (tight[static_cast<std::size_t>(i)]) continue;
    const double rate = f.row(i).tail(d.size()).dot(d);
    if (rate < -1e-15) {
      const double t = -facet_value(f, i, q) / rate;
      if (t < tau) {
        tau = t;
        binding = i;
      }
    }
  }
  if (binding < 0) throw InvariantError("section: unbounded face");
  tau = std::max(tau, 1.0);
  const Vec y = q + tau * d;
  forced = tight;
  forced[static_cast<std::size_t>(binding)] = true;
  const SimplexPoint sy = section_on_face(poly, y, std::move(forced), tol, depth + 1);
  return (1.0 - 1.0 / tau) * sq + (1.0 / tau) * sy;
}

// Minimal coefficient sum of a nonnegative preimage, or +inf.
double min_preimage_sum(const Vec& beta, const SimplexMap& m) {
  const int n = m.source_dim();
  lp::Problem p;
  p.A = m.matrix();
  p.b = beta;
  p.sense.assign(static_cast<std::size_t>(m.target_dim()), lp::Sense::Equal);
  p.objective = -Vec::Ones(n);
  const auto sol = lp::maximize(p);
  if (sol.status != lp::Status::Optimal) return kInf;
  return -sol.value;
}

void require_dim(const Vec& beta, const SimplexMap& m, const char* who) {
  if (beta.size() != m.target_dim()) throw DimensionError(std::string(who) + ": image dimension mismatch");
}

}  // namespace

SimplexMap::SimplexMap(std::vector<Vec> columns) : columns_(std::move(columns)) {
  if (columns_.empty()) throw DimensionError("SimplexMap: at least one column is required");
  k_ = static_cast<int>(columns_.front().size());
  if (k_ < 1) throw DimensionError("SimplexMap: columns must be nonempty vectors");
  v_ = columns_to_matrix(columns_, k_);
  for (const auto& c : columns_) {
    if (!c.allFinite()) throw DomainError("SimplexMap: non-finite column entry");
    scale_ = std::max(scale_, c.norm());
  }
  cone_ = cone_from_generators(columns_, k_);
}

std::vector<Vec> SimplexMap::closed_image_polytope() const {
  std::vector<Vec> out{Vec::Zero(k_)};
  out.insert(out.end(), columns_.begin(), columns_.end());
  return out;
}

Vec SimplexMap::apply(const SimplexPoint& s) const {
  if (s.size() != source_dim()) throw DimensionError("SimplexMap::apply: coefficient count mismatch");
  return v_ * s;
}

bool in_open_simplex(const SimplexPoint& s, double tol) {
  if (!s.allFinite()) return false;
  return (s.array() >= -tol).all() && s.sum() < 1.0 + tol;
}

bool in_image(const Vec& beta, const SimplexMap& m) {
  require_dim(beta, m, "in_image");
  if (beta.norm() == 0.0) return true;
  return min_preimage_sum(beta, m) <= 1.0 - kStrictSlack;
}

SimplexPoint caratheodory_reduce(const SimplexPoint& s0, const SimplexMap& m) {
  if (s0.size() != m.source_dim()) throw DimensionError("caratheodory_reduce: coefficient count mismatch");
  if (!in_open_simplex(s0)) throw DomainError("caratheodory_reduce: coefficients are not in the open simplex");
  SimplexPoint s = s0;
  const int n = m.source_dim();
  for (int guard = 0; guard <= n; ++guard) {
    std::vector<int> support;
    for (int j = 0; j < n; ++j)
      if (s(j) > 0.0) support.push_back(j);
    if (support.empty()) return s;
    Mat vs(m.target_dim(), static_cast<Eigen::Index>(support.size()));
    for (std::size_t c = 0; c < support.size(); ++c) vs.col(static_cast<Eigen::Index>(c)) = m.columns()[support[c]];
    Eigen::JacobiSVD<Mat> svd(vs, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double cut = 1e-9 * std::max(1.0, sv.size() ? sv(0) : 0.0);
    const Eigen::Index cols = vs.cols();
    const bool dependent = cols > sv.size() || sv(cols - 1) <= cut;
    if (!dependent) return s;

    Vec lambda = svd.matrixV().col(cols - 1);
    const double total = lambda.sum();
    if (total < -1e-14) {
      lambda = -lambda;
    } else if (std::abs(total) <= 1e-14) {
      for (Eigen::Index i = 0; i < cols; ++i) {
        if (std::abs(lambda(i)) > 1e-14) {
          if (lambda(i) < 0) lambda = -lambda;
          break;
        }
      }
    }
    double c = kInf;
    Eigen::Index hit = -1;
    for (Eigen::Index i = 0; i < cols; ++i) {
      if (lambda(i) > 1e-14) {
        const double ratio = s(support[static_cast<std::size_t>(i)]) / lambda(i);
        if (ratio < c) {
          c = ratio;
          hit = i;
        }
      }
    }
    if (hit < 0) throw InvariantError("caratheodory_reduce: dependence vector has no positive entry");
    for (Eigen::Index i = 0; i < cols; ++i) {
      const int j = support[static_cast<std::size_t>(i)];
      s(j) = std::max(0.0, s(j) - c * lambda(i));
    }
    s(support[static_cast<std::size_t>(hit)]) = 0.0;
  }
  throw InvariantError("caratheodory_reduce: support did not shrink");
}

ExtremalScale extremal_scale(const Vec& beta, const SimplexMap& m) {
  require_dim(beta, m, "extremal_scale");
  if (beta.norm() == 0.0) throw DomainError("extremal_scale: beta must be nonzero");
  if (!in_image(beta, m)) throw DomainError("extremal_scale: beta is not in the image of the open simplex");
  const int n = m.source_dim();
  const int k = m.target_dim();
  // maximize mu  s.t.  mu * beta - V s = 0,  sum s <= 1.
  lp::Problem p;
  p.A = Mat::Zero(k + 1, n + 1);
  p.A.col(0).head(k) = beta;
  p.A.block(0, 1, k, n) = -m.matrix();
  p.A.block(k, 1, 1, n).setOnes();
  p.b = Vec::Zero(k + 1);
  p.b(k) = 1.0;
  p.sense.assign(static_cast<std::size_t>(k), lp::Sense::Equal);
  p.sense.push_back(lp::Sense::LessEq);
  p.objective = Vec::Zero(n + 1);
  p.objective(0) = 1.0;
  const auto sol = lp::maximize(p);
  if (sol.status != lp::Status::Optimal || sol.value <= 0.0)
    throw InvariantError("extremal_scale: scaling program has no finite optimum");
  ExtremalScale out;
  out.t = std::min(1.0, 1.0 / sol.value);
  out.beta_ext = beta * sol.value;
  return out;
}

SimplexPoint closed_section(const Vec& p, const SimplexMap& m) {
  require_dim(p, m, "closed_section");
  const Polytope poly = build_polytope(m);
  return section_on_face(poly, p, std::vector<bool>(static_cast<std::size_t>(poly.facets.rows()), false),
                         1e-9 * m.scale(), 0);
}

SimplexPoint section(const Vec& beta, const SimplexMap& m) {
  require_dim(beta, m, "section");
  if (beta.norm() == 0.0) return SimplexPoint::Zero(m.source_dim());
  const ExtremalScale ext = extremal_scale(beta, m);
  return ext.t * closed_section(ext.beta_ext, m);
}

LiftedPath lift_path(const SimplexPoint& x0, const std::vector<Vec>& path, const SimplexMap& m) {
  if (path.empty()) throw DomainError("lift_path: empty path");
  if (x0.size() != m.source_dim()) throw DimensionError("lift_path: start point has wrong coefficient count");
  if (!in_open_simplex(x0)) throw DomainError("lift_path: start point is not in the open simplex");
  const double tol = 1e-9 * m.scale();
  for (const auto& p : path) require_dim(p, m, "lift_path");
  if ((m.apply(x0) - path.front()).norm() > tol) throw DomainError("lift_path: L(x0) differs from the path start");
  for (std::size_t i = 0; i < path.size(); ++i)
    if (!in_image(path[i], m)) throw PathExitError(i, "lift_path: path leaves the image at sample " + std::to_string(i));

  const std::size_t count = path.size();
  auto param = [&](std::size_t i) { return count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(count - 1); };
  LiftedPath out;
  out.points.push_back(x0);
  out.params.push_back(0.0);

  bool constant = true;
  for (const auto& p : path)
    if ((p - path.front()).norm() > tol) constant = false;
  if (constant) {
    for (std::size_t i = 0; i < count; ++i) {
      out.points.push_back(x0);
      out.params.push_back(param(i));
    }
    return out;
  }
  // The segment from x0 to sigma(path(0)) stays in one (convex) level set.
  for (std::size_t i = 0; i < count; ++i) {
    out.points.push_back(section(path[i], m));
    out.params.push_back(param(i));
  }
  return out;
}

double preimage_distance(const SimplexMap& m, const SimplexPoint& s, const Vec& beta) {
  const int n = m.source_dim();
  if (n > 16) throw DimensionError("preimage_distance: at most 16 coefficients are supported");
  require_dim(beta, m, "preimage_distance");
  const double tol = 1e-9 * m.scale();
  double best = kInf;
  const unsigned long subsets = 1ul << n;
  for (unsigned long zero = 0; zero < subsets; ++zero) {
    std::vector<int> free;
    double fixed = 0.0;
    for (int j = 0; j < n; ++j) {
      if (zero & (1ul << j))
        fixed += s(j) * s(j);
      else
        free.push_back(j);
    }
    for (int sum_active = 0; sum_active < 2; ++sum_active) {
      const Eigen::Index rows = m.target_dim() + sum_active;
      const auto nfree = static_cast<Eigen::Index>(free.size());
      Mat e = Mat::Zero(rows, nfree);
      Vec rhs(rows);
      rhs.head(m.target_dim()) = beta;
      Vec sf(nfree);
      for (Eigen::Index c = 0; c < nfree; ++c) {
        e.col(c).head(m.target_dim()) = m.columns()[static_cast<std::size_t>(free[static_cast<std::size_t>(c)])];
        if (sum_active) e(m.target_dim(), c) = 1.0;
        sf(c) = s(free[static_cast<std::size_t>(c)]);
      }
      if (sum_active) rhs(m.target_dim()) = 1.0;
      Vec xf = sf;
      if (nfree > 0) {
        const Vec corr = e.completeOrthogonalDecomposition().solve(rhs - e * sf);
        xf = sf + corr;
        if ((e * xf - rhs).norm() > tol) continue;
      } else if (rhs.norm() > tol) {
        continue;
      }
      if (nfree > 0 && (xf.minCoeff() < -tol || xf.sum() > 1.0 + tol)) continue;
      const double d = std::sqrt((xf - sf).squaredNorm() + fixed);
      best = std::min(best, d);
    }
  }
  return best;
}

OpennessResult sampled_openness(const std::function<std::optional<Vec>(std::mt19937_64&)>& target,
                                const std::function<double(const Vec&)>& distance, double r, int samples,
                                std::uint64_t seed) {
  if (!(r > 0.0)) throw DomainError("sampled_openness: radius must be positive");
  std::mt19937_64 rng(seed);
  OpennessResult out;
  const int max_attempts = 50 * std::max(1, samples);
  for (int attempt = 0; attempt < max_attempts && out.tested < samples; ++attempt) {
    const auto beta = target(rng);
    if (!beta) continue;
    ++out.tested;
    const double d = distance(*beta);
    if (d > out.worst_distance) out.worst_distance = d;
    if (d > r + 1e-12) {
      out.open = false;
      out.witness = *beta;
      return out;
    }
  }
  return out;
}

OpennessResult openness_oracle(const SimplexMap& m, const SimplexPoint& s, double r, double delta, int samples,
                               std::uint64_t seed) {
  if (!(r > 0.0) || !(delta > 0.0)) throw DomainError("openness_oracle: radii must be positive");
  if (s.size() != m.source_dim()) throw DimensionError("openness_oracle: coefficient count mismatch");
  if (!in_open_simplex(s)) throw DomainError("openness_oracle: probe is not in the open simplex");
  const Vec center = m.apply(s);
  Eigen::JacobiSVD<Mat> svd(m.matrix(), Eigen::ComputeThinU);
  const int rank = numerical_rank(m.matrix());
  const Mat basis = svd.matrixU().leftCols(rank);
  auto target = [&](std::mt19937_64& rng) -> std::optional<Vec> {
    if (rank == 0) return std::nullopt;
    std::normal_distribution<double> gauss;
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    Vec c(rank);
    for (int i = 0; i < rank; ++i) c(i) = gauss(rng);
    const double radius = delta * std::pow(unif(rng), 1.0 / rank);
    const Vec beta = center + basis * (c.normalized() * radius);
    if (!in_image(beta, m)) return std::nullopt;
    return beta;
  };
  auto dist = [&](const Vec& beta) { return preimage_distance(m, s, beta); };
  return sampled_openness(target, dist, r, samples, seed);
}

}  // namespace mcone
