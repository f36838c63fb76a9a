#include "edgering/simplex.hpp"

#include "edgering/errors.hpp"

#include <optional>

namespace edgering {
namespace {

class Tableau {
 public:
  Tableau(const LpProblem& problem) : variables_(problem.variables) {
    const std::size_t m = problem.rows.size();
    std::size_t slacks = 0;
    std::size_t artificials = 0;
    for (const LpRow& row : problem.rows) {
      if (row.coefficients.size() != variables_) {
        throw InvalidArgument("solve_lp: row length does not match variable count");
      }
      if (row.sense == RowSense::LessEqual) ++slacks;
      if (row.sense == RowSense::Equal || row.rhs < 0) ++artificials;
    }
    first_slack_ = variables_;
    first_artificial_ = variables_ + slacks;
    columns_ = first_artificial_ + artificials;
    cells_.assign(m, RationalVector(columns_ + 1));
    basis_.assign(m, 0);

    std::size_t slack = first_slack_;
    std::size_t artificial = first_artificial_;
    for (std::size_t i = 0; i < m; ++i) {
      const LpRow& row = problem.rows[i];
      const bool flip = row.rhs < 0;
      RationalVector& cells = cells_[i];
      for (std::size_t j = 0; j < variables_; ++j) {
        cells[j] = flip ? Rational(-row.coefficients[j]) : row.coefficients[j];
      }
      cells[columns_] = flip ? Rational(-row.rhs) : row.rhs;
      std::optional<std::size_t> slack_column;
      if (row.sense == RowSense::LessEqual) {
        slack_column = slack++;
        cells[*slack_column] = flip ? -1 : 1;
      }
      if (row.sense == RowSense::Equal || flip) {
        cells[artificial] = 1;
        basis_[i] = artificial++;
      } else {
        basis_[i] = *slack_column;
      }
    }
  }

  // Returns false when the objective is unbounded.
  bool optimize(const RationalVector& cost, std::size_t allowed_columns) {
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < allowed_columns && !entering; ++j) {
        if (is_basic(j)) continue;
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < cells_.size(); ++i) {
          if (cells_[i][j] != 0 && cost[basis_[i]] != 0) reduced -= cost[basis_[i]] * cells_[i][j];
        }
        if (reduced > 0) entering = j;
      }
      if (!entering) return true;

      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t i = 0; i < cells_.size(); ++i) {
        const Rational& a = cells_[i][*entering];
        if (a <= 0) continue;
        Rational ratio = cells_[i][columns_] / a;
        if (!leaving || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }

  Rational value(const RationalVector& cost) const {
    Rational v = 0;
    for (std::size_t i = 0; i < cells_.size(); ++i) v += cost[basis_[i]] * cells_[i][columns_];
    return v;
  }

  // Pivots zero-level artificials out of the basis; drops redundant rows.
  void expel_artificials() {
    for (std::size_t i = 0; i < cells_.size();) {
      if (basis_[i] < first_artificial_) {
        ++i;
        continue;
      }
      std::optional<std::size_t> column;
      for (std::size_t j = 0; j < first_artificial_ && !column; ++j) {
        if (cells_[i][j] != 0 && !is_basic(j)) column = j;
      }
      if (column) {
        pivot(i, *column);
        ++i;
      } else {
        cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  RationalVector primal() const {
    RationalVector x(variables_);
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      if (basis_[i] < variables_) x[basis_[i]] = cells_[i][columns_];
    }
    return x;
  }

  std::size_t columns() const { return columns_; }
  std::size_t first_artificial() const { return first_artificial_; }

 private:
  bool is_basic(std::size_t j) const {
    for (std::size_t b : basis_) {
      if (b == j) return true;
    }
    return false;
  }

  void pivot(std::size_t r, std::size_t c) {
    RationalVector& prow = cells_[r];
    const Rational scale = prow[c];
    for (Rational& v : prow) {
      if (v != 0) v /= scale;
    }
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      if (i == r || cells_[i][c] == 0) continue;
      const Rational f = cells_[i][c];
      RationalVector& row = cells_[i];
      for (std::size_t j = 0; j <= columns_; ++j) {
        if (prow[j] != 0) row[j] -= f * prow[j];
      }
    }
    basis_[r] = c;
  }

  std::size_t variables_;
  std::size_t first_slack_ = 0;
  std::size_t first_artificial_ = 0;
  std::size_t columns_ = 0;
  std::vector<RationalVector> cells_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpSolution solve_lp(const LpProblem& problem) {
  if (problem.objective.size() != problem.variables) {
    throw InvalidArgument("solve_lp: objective length does not match variable count");
  }
  Tableau tableau(problem);

  RationalVector phase_one(tableau.columns());
  for (std::size_t j = tableau.first_artificial(); j < tableau.columns(); ++j) phase_one[j] = -1;
  if (tableau.first_artificial() < tableau.columns()) {
    tableau.optimize(phase_one, tableau.columns());
    if (tableau.value(phase_one) < 0) return {LpStatus::Infeasible, 0, {}};
    tableau.expel_artificials();
  }

  RationalVector phase_two(tableau.columns());
  for (std::size_t j = 0; j < problem.variables; ++j) phase_two[j] = problem.objective[j];
  if (!tableau.optimize(phase_two, tableau.first_artificial())) {
    return {LpStatus::Unbounded, 0, {}};
  }
  return {LpStatus::Optimal, tableau.value(phase_two), tableau.primal()};
}

}  // namespace edgering
