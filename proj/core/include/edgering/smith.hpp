#pragma once

#include "edgering/integer_matrix.hpp"

#include <optional>

namespace edgering {

/// U * M * V == D with U, V unimodular and D diagonal. `diagonals` lists the
/// nonzero diagonal entries d1 | d2 | ... | ds, all positive.
struct SmithDecomposition {
  IntegerMatrix u;
  IntegerMatrix d;
  IntegerMatrix v;
  std::vector<Integer> diagonals;

  std::size_t rank() const { return diagonals.size(); }
};

/// Deterministic: the pivot is always the smallest nonzero absolute value in
/// the active block, ties broken row-major.
SmithDecomposition smith_normal_form(const IntegerMatrix& m);

/// Z^rows / (column span of m) ≅ Z^free_rank ⊕ ⊕ Z/torsion[k].
/// `projection` has free_rank + torsion.size() rows: the first free_rank rows
/// give the free coordinates, the remaining rows are read modulo torsion[k].
struct CokernelPresentation {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;
  IntegerMatrix projection;

  /// Image of an ambient vector; torsion coordinates reduced into [0, t).
  IntVector project(const IntVector& x) const;
};

CokernelPresentation cokernel(const IntegerMatrix& m);

/// Some x in Z^cols with m * x == b, or nullopt when none exists.
std::optional<IntVector> solve_integer_system(const IntegerMatrix& m, const IntVector& b);

/// Inverse of a square matrix with determinant ±1; throws otherwise.
IntegerMatrix unimodular_inverse(const IntegerMatrix& m);

/// True iff the columns of m extend to a basis of Z^rows (all SNF diagonals
/// equal 1 and the columns are independent).
bool columns_extend_to_basis(const IntegerMatrix& m);

}  // namespace edgering
