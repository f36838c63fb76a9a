#include "edgering/smith.hpp"

#include "edgering/errors.hpp"

#include <algorithm>

namespace edgering {
namespace {

struct Pivot {
  std::size_t row;
  std::size_t col;
};

std::optional<Pivot> smallest_nonzero(const IntegerMatrix& d, std::size_t t) {
  std::optional<Pivot> best;
  Integer best_abs;
  for (std::size_t i = t; i < d.rows(); ++i) {
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Integer a = abs(d(i, j));
      if (!best || a < best_abs) {
        best = Pivot{i, j};
        best_abs = std::move(a);
      }
    }
  }
  return best;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& m) {
  IntegerMatrix d = m;
  IntegerMatrix u = IntegerMatrix::identity(m.rows());
  IntegerMatrix v = IntegerMatrix::identity(m.cols());
  const std::size_t limit = std::min(m.rows(), m.cols());

  auto bring_to = [&](std::size_t t, const Pivot& p) {
    d.swap_rows(t, p.row);
    u.swap_rows(t, p.row);
    d.swap_cols(t, p.col);
    v.swap_cols(t, p.col);
  };

  std::size_t t = 0;
  for (; t < limit; ++t) {
    const auto first = smallest_nonzero(d, t);
    if (!first) break;
    bring_to(t, *first);

    while (true) {
      bool cleared = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        const Integer q = floor_div(d(i, t), d(t, t));
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) cleared = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        const Integer q = floor_div(d(t, j), d(t, t));
        d.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) cleared = false;
      }
      if (!cleared) {
        bring_to(t, *smallest_nonzero(d, t));
        continue;
      }
      // Row t and column t are clear; enforce divisibility of the rest.
      bool divisible = true;
      for (std::size_t i = t + 1; i < d.rows() && divisible; ++i) {
        for (std::size_t j = t + 1; j < d.cols(); ++j) {
          if (d(i, j) % d(t, t) != 0) {
            d.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divisible = false;
            break;
          }
        }
      }
      if (divisible) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }

  SmithDecomposition out{std::move(u), std::move(d), std::move(v), {}};
  for (std::size_t i = 0; i < t; ++i) out.diagonals.push_back(out.d(i, i));
  return out;
}

IntVector CokernelPresentation::project(const IntVector& x) const {
  IntVector image = projection * x;
  for (std::size_t k = 0; k < torsion.size(); ++k) {
    Integer& c = image[free_rank + k];
    c = c - floor_div(c, torsion[k]) * torsion[k];
  }
  return image;
}

CokernelPresentation cokernel(const IntegerMatrix& m) {
  const SmithDecomposition snf = smith_normal_form(m);
  CokernelPresentation out;
  out.free_rank = m.rows() - snf.rank();
  std::vector<std::size_t> torsion_rows;
  for (std::size_t i = 0; i < snf.rank(); ++i) {
    if (snf.diagonals[i] > 1) {
      torsion_rows.push_back(i);
      out.torsion.push_back(snf.diagonals[i]);
    }
  }
  out.projection = IntegerMatrix(out.free_rank + torsion_rows.size(), m.rows());
  std::size_t r = 0;
  for (std::size_t i = snf.rank(); i < m.rows(); ++i, ++r) {
    for (std::size_t c = 0; c < m.rows(); ++c) out.projection(r, c) = snf.u(i, c);
  }
  for (std::size_t i : torsion_rows) {
    for (std::size_t c = 0; c < m.rows(); ++c) out.projection(r, c) = snf.u(i, c);
    ++r;
  }
  return out;
}

std::optional<IntVector> solve_integer_system(const IntegerMatrix& m, const IntVector& b) {
  if (b.size() != m.rows()) throw InvalidArgument("solve_integer_system: dimension mismatch");
  const SmithDecomposition snf = smith_normal_form(m);
  const IntVector c = snf.u * b;
  IntVector y(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i < snf.rank()) {
      if (c[i] % snf.diagonals[i] != 0) return std::nullopt;
      y[i] = c[i] / snf.diagonals[i];
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return snf.v * y;
}

IntegerMatrix unimodular_inverse(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("unimodular_inverse: matrix is not square");
  const SmithDecomposition snf = smith_normal_form(m);
  if (snf.rank() != m.rows() ||
      std::any_of(snf.diagonals.begin(), snf.diagonals.end(), [](const Integer& x) { return x != 1; })) {
    throw InvalidArgument("unimodular_inverse: matrix is not unimodular");
  }
  // U M V = I, hence M^{-1} = V U.
  return snf.v * snf.u;
}

bool columns_extend_to_basis(const IntegerMatrix& m) {
  const SmithDecomposition snf = smith_normal_form(m);
  if (snf.rank() != m.cols()) return false;
  return std::all_of(snf.diagonals.begin(), snf.diagonals.end(),
                     [](const Integer& x) { return x == 1; });
}

}  // namespace edgering
