#include "edgering/linear_feasibility.hpp"

#include "edgering/errors.hpp"
#include "edgering/rational_linear.hpp"
#include "edgering/simplex.hpp"

namespace edgering {

bool LinearConstraint::satisfied_by(const RationalVector& x) const {
  const Rational lhs = dot(coefficients, x);
  switch (relation) {
    case Relation::LessEqual:
      return lhs <= bound;
    case Relation::Less:
      return lhs < bound;
    case Relation::Equal:
      return lhs == bound;
  }
  return false;
}

void StrictLinearSystem::add(RationalVector coefficients, Relation relation, Rational bound) {
  if (coefficients.size() != variables_) {
    throw InvalidArgument("constraint has " + std::to_string(coefficients.size()) +
                          " coefficients, system has " + std::to_string(variables_) +
                          " variables");
  }
  constraints_.push_back({std::move(coefficients), relation, std::move(bound)});
}

void StrictLinearSystem::add_lower(RationalVector coefficients, Relation relation,
                                   const Rational& lower) {
  for (Rational& c : coefficients) c = -c;
  add(std::move(coefficients), relation, -lower);
}

bool StrictLinearSystem::satisfied_by(const RationalVector& x) const {
  if (x.size() != variables_) return false;
  for (const LinearConstraint& c : constraints_) {
    if (!c.satisfied_by(x)) return false;
  }
  return true;
}

std::optional<RationalVector> feasible_with_strict(const StrictLinearSystem& system) {
  // Free x = p - q with p, q >= 0; the slack eps sits at index 2n.
  const std::size_t n = system.variables();
  const std::size_t eps = 2 * n;
  LpProblem lp;
  lp.variables = 2 * n + 1;
  lp.objective.assign(lp.variables, 0);
  lp.objective[eps] = 1;
  for (const LinearConstraint& c : system.constraints()) {
    LpRow row;
    row.coefficients.assign(lp.variables, 0);
    for (std::size_t j = 0; j < n; ++j) {
      row.coefficients[j] = c.coefficients[j];
      row.coefficients[n + j] = -c.coefficients[j];
    }
    row.sense = c.relation == Relation::Equal ? RowSense::Equal : RowSense::LessEqual;
    if (c.relation == Relation::Less) row.coefficients[eps] = 1;
    row.rhs = c.bound;
    lp.rows.push_back(std::move(row));
  }
  LpRow cap;
  cap.coefficients.assign(lp.variables, 0);
  cap.coefficients[eps] = 1;
  cap.rhs = 1;
  lp.rows.push_back(std::move(cap));

  const LpSolution solution = solve_lp(lp);
  if (solution.status == LpStatus::Unbounded) {
    throw ContractViolation("feasible_with_strict: capped slack reported unbounded");
  }
  if (solution.status == LpStatus::Infeasible || solution.objective_value <= 0) {
    return std::nullopt;
  }
  RationalVector witness(n);
  for (std::size_t j = 0; j < n; ++j) witness[j] = solution.x[j] - solution.x[n + j];
  if (!system.satisfied_by(witness)) {
    throw ContractViolation("feasible_with_strict: witness fails its own system");
  }
  return witness;
}

}  // namespace edgering
