#include "mcone/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mcone::lp {
namespace {

// Tableau rows 0..m-1 hold B^-1 [A | b]; row m holds reduced costs for a
// maximization objective (optimal when every entry is >= -tol).
class Tableau {
 public:
  Tableau(Mat t, std::vector<int> basis, double tol)
      : t_(std::move(t)), basis_(std::move(basis)), tol_(tol) {}

  int rows() const { return static_cast<int>(t_.rows()) - 1; }
  int cols() const { return static_cast<int>(t_.cols()) - 1; }

  void set_objective(const Vec& c, const std::vector<bool>& allowed) {
    allowed_ = allowed;
    const int m = rows();
    t_.row(m).setZero();
    for (int j = 0; j < cols(); ++j) t_(m, j) = -c(j);
    for (int i = 0; i < m; ++i) {
      const double cb = c(basis_[i]);
      if (cb != 0.0) t_.row(m) += cb * t_.row(i);
    }
  }

  // Bland's rule keeps degenerate problems from cycling.
  Status run() {
    const int m = rows();
    const int limit = 50 * (m + cols() + 10);
    for (int iter = 0; iter < limit; ++iter) {
      int enter = -1;
      for (int j = 0; j < cols(); ++j) {
        if (allowed_[j] && t_(m, j) < -tol_) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return Status::Optimal;
      int leave = -1;
      double best = std::numeric_limits<double>::infinity();
      for (int i = 0; i < m; ++i) {
        const double a = t_(i, enter);
        if (a > tol_) {
          const double ratio = t_(i, cols()) / a;
          if (ratio < best - 1e-14 ||
              (std::abs(ratio - best) <= 1e-14 && leave >= 0 && basis_[i] < basis_[leave])) {
            best = ratio;
            leave = i;
          }
        }
      }
      if (leave < 0) return Status::Unbounded;
      pivot(leave, enter);
    }
    throw InvariantError("lp: iteration limit exceeded");
  }

  void pivot(int r, int c) {
    t_.row(r) /= t_(r, c);
    for (int i = 0; i < t_.rows(); ++i) {
      if (i != r && t_(i, c) != 0.0) t_.row(i) -= t_(i, c) * t_.row(r);
    }
    basis_[r] = c;
  }

  double value() const { return t_(rows(), cols()); }
  Mat& data() { return t_; }
  std::vector<int>& basis() { return basis_; }

  Vec primal(int n) const {
    Vec x = Vec::Zero(n);
    for (int i = 0; i < rows(); ++i)
      if (basis_[i] < n) x(basis_[i]) = std::max(0.0, t_(i, cols()));
    return x;
  }

 private:
  Mat t_;
  std::vector<int> basis_;
  std::vector<bool> allowed_;
  double tol_;
};

}  // namespace

Solution maximize(const Problem& p, double tol) {
  const int m = static_cast<int>(p.A.rows());
  const int n = static_cast<int>(p.A.cols());
  if (p.b.size() != m || static_cast<int>(p.sense.size()) != m || p.objective.size() != n)
    throw DimensionError("lp: inconsistent problem dimensions");

  // Flip rows so the right-hand side is nonnegative.
  Mat A = p.A;
  Vec b = p.b;
  std::vector<Sense> sense = p.sense;
  for (int i = 0; i < m; ++i) {
    if (b(i) < 0.0) {
      A.row(i) *= -1.0;
      b(i) = -b(i);
      if (sense[i] == Sense::LessEq)
        sense[i] = Sense::GreaterEq;
      else if (sense[i] == Sense::GreaterEq)
        sense[i] = Sense::LessEq;
    }
  }

  int slack_count = 0;
  int artificial_count = 0;
  for (auto s : sense) {
    if (s != Sense::Equal) ++slack_count;
    if (s != Sense::LessEq) ++artificial_count;
  }
  const int total = n + slack_count + artificial_count;
  Mat t = Mat::Zero(m + 1, total + 1);
  std::vector<int> basis(m);
  std::vector<bool> artificial(total, false);
  int next_slack = n;
  int next_art = n + slack_count;
  for (int i = 0; i < m; ++i) {
    t.block(i, 0, 1, n) = A.row(i);
    t(i, total) = b(i);
    if (sense[i] == Sense::LessEq) {
      t(i, next_slack) = 1.0;
      basis[i] = next_slack++;
    } else {
      if (sense[i] == Sense::GreaterEq) t(i, next_slack++) = -1.0;
      t(i, next_art) = 1.0;
      artificial[next_art] = true;
      basis[i] = next_art++;
    }
  }

  Tableau tab(std::move(t), std::move(basis), tol);
  const double feas_tol = 1e-9 * std::max(1.0, b.size() > 0 ? b.lpNorm<Eigen::Infinity>() : 0.0);

  if (artificial_count > 0) {
    Vec c1 = Vec::Zero(total);
    for (int j = 0; j < total; ++j)
      if (artificial[j]) c1(j) = -1.0;
    tab.set_objective(c1, std::vector<bool>(total, true));
    tab.run();
    if (tab.value() < -feas_tol) return Solution{Status::Infeasible, 0.0, Vec::Zero(n)};
    // Drive remaining artificials out of the basis; rows with no usable
    // pivot are redundant and are zeroed.
    for (int i = 0; i < tab.rows(); ++i) {
      if (!artificial[tab.basis()[i]]) continue;
      int col = -1;
      for (int j = 0; j < total; ++j) {
        if (!artificial[j] && std::abs(tab.data()(i, j)) > 1e-9) {
          col = j;
          break;
        }
      }
      if (col >= 0) {
        tab.pivot(i, col);
      } else {
        tab.data().row(i).setZero();
      }
    }
  }

  Vec c = Vec::Zero(total);
  c.head(n) = p.objective;
  std::vector<bool> allowed(total, true);
  for (int j = 0; j < total; ++j)
    if (artificial[j]) allowed[j] = false;
  tab.set_objective(c, allowed);
  const Status st = tab.run();
  if (st == Status::Unbounded) return Solution{Status::Unbounded, 0.0, Vec::Zero(n)};
  Vec x = tab.primal(n);
  return Solution{Status::Optimal, p.objective.dot(x), x};
}

}  // namespace mcone::lp
