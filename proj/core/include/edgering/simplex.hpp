#pragma once

#include "edgering/numeric.hpp"

#include <vector>

namespace edgering {

enum class RowSense { LessEqual, Equal };

struct LpRow {
  RationalVector coefficients;
  RowSense sense = RowSense::LessEqual;
  Rational rhs;
};

/// maximize objective·x subject to the rows and x >= 0.
struct LpProblem {
  std::size_t variables = 0;
  RationalVector objective;
  std::vector<LpRow> rows;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rational objective_value;
  RationalVector x;
};

/// Dense two-phase tableau simplex over Q with Bland's rule.
LpSolution solve_lp(const LpProblem& problem);

}  // namespace edgering
