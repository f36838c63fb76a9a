#pragma once

#include "edgering/graph.hpp"
#include "edgering/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace edgering {

/// A divisor class in Z^n (fundamental-first coordinates).
using Character = IntVector;

enum class InequalityFamily { Pairwise, Second, Third };

std::string to_string(InequalityFamily family);

/// lower <= <coefficients, z> <= upper
struct RegionInequality {
  IntVector coefficients;
  Integer lower;
  Integer upper;
  InequalityFamily family = InequalityFamily::Pairwise;

  bool contains(const RationalVector& z) const;
  bool operator==(const RegionInequality&) const = default;
};

struct ConicRegion {
  std::size_t n = 0;
  std::vector<RegionInequality> inequalities;
  /// The inequality system equals the conic classification only for n <= 4.
  bool certified = false;

  bool contains(const Character& z) const;
  bool contains(const RationalVector& z) const;
};

/// Pairwise family for i < j (z_i - z_j in [-r_j, r_i]); then the second and
/// third families ordered by |I|, then I, then the multiset J. Throws
/// InvalidArgument for n <= 2.
ConicRegion conic_region(const PartitionSpec& spec);

struct BoundingBox {
  IntVector lower;
  IntVector upper;

  std::size_t point_count() const;
  BoundingBox inflated(const Integer& margin) const;
};

/// z_i (i < n) from the singleton second-family bounds, z_n from the
/// pairwise bounds against those.
BoundingBox bounding_box(const PartitionSpec& spec);

/// Calls visit(point) for every integer point of the box, lexicographically.
template <typename Visit>
void for_each_box_point(const BoundingBox& box, Visit&& visit) {
  const std::size_t n = box.lower.size();
  if (n == 0) return;
  for (std::size_t i = 0; i < n; ++i) {
    if (box.lower[i] > box.upper[i]) return;
  }
  Character z = box.lower;
  while (true) {
    visit(static_cast<const Character&>(z));
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (z[i] < box.upper[i]) {
        ++z[i];
        break;
      }
      z[i] = box.lower[i];
      if (i == 0) return;
    }
  }
}

/// Sorted integer points of the region.
std::vector<Character> conic_lattice_points(const PartitionSpec& spec);

/// Sorted vertices, found by intersecting every n-subset of the bounding
/// hyperplanes and keeping the points of the region.
std::vector<RationalVector> region_vertices(const PartitionSpec& spec);

struct ConicFeasibility {
  bool feasible = false;
  std::optional<RationalVector> witness;
};

/// Is there x in (-1,0]^d with c_j - 1 < <tau_{d+j}, x> <= c_j for all j?
ConicFeasibility is_conic_feasible(const PartitionSpec& spec, const RationalVector& c);
ConicFeasibility is_conic_feasible(const PartitionSpec& spec, const Character& c);

/// Exact check of the condition above for a given x.
bool is_conic_witness(const PartitionSpec& spec, const RationalVector& c, const RationalVector& x);

struct VertexWitness {
  RationalVector vertex;
  RationalVector x;
};

/// Writes c as a convex combination of the vertices and returns the same
/// combination of their witnesses, verified exactly. nullopt if c lies
/// outside the convex hull of the vertices.
std::optional<RationalVector> combine_vertex_witnesses(const PartitionSpec& spec,
                                                       const RationalVector& c,
                                                       const std::vector<VertexWitness>& witnesses);

struct EquivalenceMismatch {
  Character point;
  bool feasible = false;
  bool in_region = false;
};

struct EquivalenceReport {
  BoundingBox box;
  std::size_t points_checked = 0;
  std::size_t feasible_count = 0;
  std::size_t region_count = 0;
  std::vector<EquivalenceMismatch> mismatches;

  bool passed() const { return mismatches.empty(); }
};

/// Compares LP feasibility with region membership on every point of the
/// bounding box inflated by `margin`.
EquivalenceReport verify_equivalence(const PartitionSpec& spec, int margin);

}  // namespace edgering
