#pragma once

#include "edgering/numeric.hpp"

#include <optional>
#include <vector>

namespace edgering {

enum class Relation { LessEqual, Less, Equal };

/// coefficients·x (relation) bound
struct LinearConstraint {
  RationalVector coefficients;
  Relation relation = Relation::LessEqual;
  Rational bound;

  bool satisfied_by(const RationalVector& x) const;
};

/// A conjunction of linear constraints over free rational variables, where
/// some inequalities may be strict.
class StrictLinearSystem {
 public:
  explicit StrictLinearSystem(std::size_t variables) : variables_(variables) {}

  void add(RationalVector coefficients, Relation relation, Rational bound);
  /// lower (<= or <) coefficients·x, as the negated upper form.
  void add_lower(RationalVector coefficients, Relation relation, const Rational& lower);

  std::size_t variables() const { return variables_; }
  const std::vector<LinearConstraint>& constraints() const { return constraints_; }
  bool satisfied_by(const RationalVector& x) const;

 private:
  std::size_t variables_;
  std::vector<LinearConstraint> constraints_;
};

/// A point satisfying every constraint exactly (strict ones strictly), or
/// nullopt when none exists. Decided by maximizing a common slack eps added
/// to the strict rows, capped at eps <= 1; feasible iff the optimum is > 0.
std::optional<RationalVector> feasible_with_strict(const StrictLinearSystem& system);

}  // namespace edgering
