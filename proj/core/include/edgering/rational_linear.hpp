#pragma once

#include "edgering/numeric.hpp"

#include <optional>
#include <vector>

namespace edgering {

using RationalRows = std::vector<RationalVector>;

/// Rank over Q of the matrix with the given rows.
std::size_t rational_rank(RationalRows rows);

/// Unique solution of a square system, or nullopt when it is singular.
std::optional<RationalVector> solve_square(RationalRows a, RationalVector b);

Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace edgering
