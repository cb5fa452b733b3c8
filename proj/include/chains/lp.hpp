#pragma once

#include "chains/rational.hpp"

#include <vector>

namespace chains {

enum class Rel { Le, Ge, Eq };

struct LinearConstraint {
  std::vector<Rational> coeffs;  // length = num_vars, missing tail treated as 0
  Rel rel = Rel::Le;
  Rational rhs = 0;
};

struct SimplexResult {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status = Status::Infeasible;
  Rational objective = 0;
  std::vector<Rational> solution;  // length = num_vars when Optimal
};

// Maximizes c.x over x >= 0 subject to the constraints, in exact rational
// arithmetic. Two-phase dense simplex with Bland's rule, so it terminates on
// every input; meant for the small systems realizability produces (tens of
// rows), not for anything large.
SimplexResult simplex_maximize(const std::vector<Rational>& objective,
                               const std::vector<LinearConstraint>& constraints,
                               int num_vars);

}  // namespace chains
