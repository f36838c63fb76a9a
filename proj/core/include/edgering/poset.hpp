#pragma once

#include "edgering/edge_polytope.hpp"
#include "edgering/graph.hpp"
#include "edgering/integer_matrix.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace edgering {

/// Finite poset on the elements 1..size. The strict order is stored
/// transitively closed.
class Poset {
 public:
  /// Closes `relations` (pairs a < b) transitively; rejects out-of-range
  /// elements and cycles.
  Poset(std::size_t size, const std::vector<std::pair<int, int>>& relations);

  std::size_t size() const { return size_; }
  bool less(int a, int b) const { return below_[b - 1] >> (a - 1) & 1u; }
  bool comparable(int a, int b) const { return a == b || less(a, b) || less(b, a); }

  /// All pairs (a, b) with a < b, lexicographic.
  std::vector<std::pair<int, int>> relations() const;
  /// Pairs a < b with nothing strictly between, lexicographic.
  std::vector<std::pair<int, int>> covers() const;

  /// Bitmask of the elements strictly below `element` (bit i-1 for element i).
  std::uint64_t below_mask(int element) const { return below_[element - 1]; }
  std::uint64_t above_mask(int element) const { return above_[element - 1]; }

  bool operator==(const Poset& other) const {
    return size_ == other.size_ && below_ == other.below_;
  }

 private:
  std::size_t size_;
  std::vector<std::uint64_t> below_;
  std::vector<std::uint64_t> above_;
};

/// Pi_{m,n}: chains p_1 < ... < p_m and p_{m+1} < ... < p_{m+n}; with_extra
/// adds p_1 < p_{m+n}.
Poset chain_pair_poset(int m, int n, bool with_extra);

/// z1 < z3 < z4 and z2 < z3 < z5 on the elements 1..5.
Poset x_shape_poset();

enum class PolytopeKind { Order, Chain };

struct PosetPolytope {
  PolytopeKind kind = PolytopeKind::Order;
  /// Sorted 0/1 indicator vectors.
  std::vector<LatticePoint> vertices;
};

/// Indicator vectors of the poset ideals (down-sets).
PosetPolytope order_polytope_vertices(const Poset& p, EnumerationLimits limits = {});
/// Indicator vectors of the antichains.
PosetPolytope chain_polytope_vertices(const Poset& p, EnumerationLimits limits = {});

/// 0 <= x <= 1 and x_a >= x_b whenever a < b.
bool satisfies_order_inequalities(const Poset& p, const LatticePoint& x);
/// x >= 0 and the sum over each maximal chain is at most 1.
bool satisfies_chain_inequalities(const Poset& p, const LatticePoint& x);

std::vector<std::vector<int>> maximal_chains(const Poset& p);

/// Some element has two incomparable elements below it and two
/// incomparable elements above it.
bool contains_x_shape(const Poset& p, EnumerationLimits limits = {});

enum class HibiVariant { Bipartite, OneSingleton };

std::string to_string(HibiVariant variant);

struct HibiPair {
  Edge edge;
  LatticePoint image;
};

struct HibiReductionReport {
  HibiVariant variant = HibiVariant::Bipartite;
  int m = 0;
  int n = 0;
  /// One entry per edge (vertex of the edge polytope), canonical edge order.
  std::vector<HibiPair> bijection;
  std::size_t antichain_count = 0;
  Integer linear_determinant;
  bool injective = false;
  bool surjective = false;
  bool images_are_antichains = false;

  bool passed() const {
    return injective && surjective && images_are_antichains && abs(linear_determinant) == 1;
  }
};

/// Bipartite: K_{m+1,n+1} on parts {1..m+1}, {m+2..m+n+2}; drop coordinates
/// m+1 and m+n+2; compare with the antichains of Pi_{m,n}.
/// One-singleton: K_{1,m,n} on parts {1..m}, {m+1..m+n}, {m+n+1}; drop
/// coordinate m+n+1, apply A, translate by -e_1-e_{m+n}, apply
/// diag(-1,1,...,1,-1); compare with the antichains of Pi'_{m,n}.
HibiReductionReport verify_hibi_reduction(int m, int n, HibiVariant variant,
                                          EnumerationLimits limits = {});

/// The matrix A of the one-singleton map: row 1 sums coordinates 1..m,
/// row m+n sums coordinates m+1..m+n, the other rows are the identity.
IntegerMatrix one_singleton_matrix(int m, int n);

}  // namespace edgering
