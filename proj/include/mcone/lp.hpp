#pragma once

#include "mcone/common.hpp"

#include <vector>

/// Dense two-phase simplex for the small programs that arise in cone and
/// simplex-image queries (a few dozen variables at most).
namespace mcone::lp {

enum class Sense { LessEq, Equal, GreaterEq };

/// maximize objective . x  subject to  A x (sense) b,  x >= 0.
struct Problem {
  Mat A;
  Vec b;
  std::vector<Sense> sense;
  Vec objective;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  double value = 0.0;
  Vec x;
};

Solution maximize(const Problem& problem, double tol = 1e-10);

}  // namespace mcone::lp
