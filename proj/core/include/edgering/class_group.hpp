#pragma once

#include "edgering/graph.hpp"
#include "edgering/integer_matrix.hpp"
#include "edgering/numeric.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace edgering {

/// w_alpha for alpha = rho(e), indexed by the ordered facet system.
struct WeightVector {
  IntVector entries;
  Edge source_edge;
};

/// Closed form: 1 at the vertex forms of a and b and at every fundamental
/// form except those of the parts containing a and b.
WeightVector weight_vector(const PartitionSpec& spec, const Edge& e);

/// (d+n) x |E| matrix of weight vectors, columns in canonical edge order.
IntegerMatrix class_matrix(const PartitionSpec& spec);

enum class BasisConvention { FundamentalFirst, VertexFirst };

std::string to_string(BasisConvention convention);
/// Accepts "fundamental-first" and "vertex-first".
BasisConvention parse_convention(std::string_view text);

/// Free rank and torsion of a finitely generated abelian group, plus the SNF
/// data it was read from.
struct GroupInvariants {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;
  std::size_t relation_rank = 0;
  std::vector<Integer> diagonals;

  bool same_group(const GroupInvariants& other) const {
    return free_rank == other.free_rank && torsion == other.torsion;
  }
};

/// Z^{|Psi|} modulo the columns of the class matrix.
GroupInvariants class_group_from_class_matrix(const PartitionSpec& spec);
/// Z^{d+n} modulo the image of the tau-map Z^d -> Z^{d+n}.
GroupInvariants class_group_from_tau(const PartitionSpec& spec);

struct ClassGroupStructure {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;
  /// beta_1..beta_{d+n}: classes of the prime divisors (vertex divisors
  /// first), coordinates in the basis fixed by `convention`.
  std::vector<IntVector> divisor_images;
  BasisConvention convention = BasisConvention::FundamentalFirst;
  /// Divisor indices (zero-based) whose classes are the unit vectors.
  std::vector<std::size_t> basis_divisors;
};

/// Computes the group along both routes and throws VerificationFailure if
/// they disagree or the result is not torsion-free of rank n. Throws
/// InvalidArgument if the convention cannot be realized.
ClassGroupStructure class_group(const PartitionSpec& spec,
                                BasisConvention convention = BasisConvention::FundamentalFirst);

/// The d relations sum_j <tau_j, e_k> D_j = 0, one coefficient row per k.
std::vector<IntVector> divisor_relations(const PartitionSpec& spec);

bool divisor_relations_hold(const PartitionSpec& spec, const std::vector<IntVector>& images);

/// Vertex-first coordinates of the same classes equal T times the
/// fundamental-first ones; returns T (n x n, determinant +-1).
IntegerMatrix convention_transform(const PartitionSpec& spec);

enum class DependencyKind { EvenCycle, OddCyclesSharingVertex, OddCyclesJoinedByPath };

/// Edges listed in traversal order. A cycle's start vertex is the vertex
/// shared by its first and last edges; the path runs from the first cycle's
/// start vertex to the second cycle's start vertex.
struct DependencyConfiguration {
  DependencyKind kind = DependencyKind::EvenCycle;
  std::vector<Edge> first_cycle;
  std::vector<Edge> second_cycle;
  std::vector<Edge> path;
};

struct DependencyWitness {
  std::vector<Edge> edges;
  std::vector<Integer> coefficients;
};

/// Signed coefficients with sum_e c_e w_{rho(e)} = 0, verified exactly.
/// Throws InvalidArgument if the edges do not form the declared configuration.
DependencyWitness dependency_witness(const PartitionSpec& spec,
                                     const DependencyConfiguration& configuration);

/// Edges of the closed walk v0 v1 ... v_{k-1} v0.
std::vector<Edge> cycle_from_vertices(const std::vector<int>& vertices);
/// Edges of the walk v0 v1 ... v_k.
std::vector<Edge> path_from_vertices(const std::vector<int>& vertices);

}  // namespace edgering
