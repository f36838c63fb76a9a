#pragma once

#include "edgering/graph.hpp"
#include "edgering/integer_matrix.hpp"
#include "edgering/numeric.hpp"

#include <optional>
#include <vector>

namespace edgering {

using LatticePoint = std::vector<int>;

/// Lattice points of P_G: one 0/1 vector e_a + e_b per edge, in the graph's
/// canonical edge order. (Every lattice point of an edge polytope is of this
/// form.)
struct EdgePolytope {
  std::size_t ambient_dim = 0;
  std::vector<Edge> edges;
  std::vector<LatticePoint> lattice_points;
};

EdgePolytope edge_polytope(const Graph& g);

/// Where a facet form came from: a regular vertex or a fundamental set.
struct FacetProvenance {
  enum class Kind { Vertex, FundamentalSet };
  Kind kind = Kind::Vertex;
  int vertex = 0;
  VertexSubset set;

  bool operator==(const FacetProvenance&) const = default;
};

/// Supporting linear form scaled so that its values on the lattice points are
/// integers with gcd 1.
struct FacetForm {
  RationalVector coefficients;
  FacetProvenance provenance;

  Rational evaluate(const LatticePoint& p) const;
};

/// Vertex forms by label, then fundamental-set forms (by part index for
/// complete multipartite graphs, lexicographic otherwise).
struct FacetSystem {
  std::size_t dim = 0;
  std::vector<FacetForm> forms;

  std::size_t size() const { return forms.size(); }
};

/// Divides `form` by the gcd of its values on `points`. Throws
/// InvalidArgument if the form vanishes on every point.
RationalVector normalize_on_points(const IntVector& form, const std::vector<LatticePoint>& points);

/// Throws UnsupportedSpec (pointing at the Hibi-ring reduction) unless n = 3
/// with r1 >= 2 or n >= 4.
void require_supported(const PartitionSpec& spec);

/// Facet system of P_{K_{r1..rn}}: the d unit forms, then for each part V_i
/// the normalized form of sum_{V \ V_i} e_k - sum_{V_i} e_j.
FacetSystem facet_system(const PartitionSpec& spec);

/// Generic route for a non-bipartite graph: forms of all regular vertices and
/// all fundamental sets (may be redundant).
FacetSystem graph_facet_system(const Graph& g, EnumerationLimits limits = {});

/// Nonnegative on every lattice point and zero on at least one.
bool is_supporting(const FacetForm& form, const EdgePolytope& polytope);

/// Each form cuts out a facet (its zero set has affine dimension dim P - 1)
/// and no two forms share a zero set.
bool is_irredundant(const FacetSystem& facets, const EdgePolytope& polytope);

/// Forms tau_1..tau_{d+n} of the projected cone: tau_i = e_i for i <= d and
///   tau_{d+i} = sum_{k in V \ V_n} e_k - sum_{l in V_i} e_l - e_d.
struct TauSystem {
  std::size_t dim = 0;
  std::vector<IntVector> forms;

  /// (d+n) x d matrix whose rows are the forms: the map x -> tau(x).
  IntegerMatrix matrix() const;
};

TauSystem tau_system(const PartitionSpec& spec);

struct GorensteinResult {
  bool gorenstein = false;
  std::optional<IntVector> witness;
};

/// Gorenstein iff some x in Z^d has <tau_i, x> = 1 for every i.
GorensteinResult is_gorenstein(const PartitionSpec& spec);

}  // namespace edgering
