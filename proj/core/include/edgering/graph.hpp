#pragma once

#include <compare>
#include <cstddef>
#include <vector>

namespace edgering {

/// Unordered pair of distinct vertex labels, stored with a < b.
struct Edge {
  int a = 0;
  int b = 0;

  bool contains(int v) const { return a == v || b == v; }
  int other(int v) const { return v == a ? b : a; }
  auto operator<=>(const Edge&) const = default;
};

/// Normalizes the pair order; rejects loops.
Edge make_edge(int u, int v);

/// Sorted set of vertex labels.
struct VertexSubset {
  std::vector<int> members;

  VertexSubset() = default;
  explicit VertexSubset(std::vector<int> labels);

  bool contains(int v) const;
  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
  auto operator<=>(const VertexSubset&) const = default;
};

/// Finite simple graph on the labels 1..d. Edges are kept in lexicographic
/// order; that order is the canonical column order everywhere downstream.
class Graph {
 public:
  Graph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool adjacent(int u, int v) const;
  bool has_edge(const Edge& e) const { return adjacent(e.a, e.b); }
  std::vector<int> neighbors(int v) const;
  /// Position of e in the canonical order; throws InvalidArgument for non-edges.
  std::size_t edge_index(const Edge& e) const;

  bool operator==(const Graph& other) const {
    return vertex_count_ == other.vertex_count_ && edges_ == other.edges_;
  }

 private:
  std::size_t vertex_count_;
  std::vector<Edge> edges_;
  std::vector<std::vector<char>> adjacency_;
};

/// Part sizes r1 <= ... <= rn of a complete multipartite graph. Part i
/// occupies consecutive labels, so the last label d belongs to part n.
class PartitionSpec {
 public:
  explicit PartitionSpec(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t part_count() const { return parts_.size(); }
  std::size_t vertex_count() const { return vertex_count_; }
  int part_size(std::size_t part) const { return parts_.at(part); }
  /// Zero-based index of the part containing `label`.
  std::size_t part_of(int label) const;
  /// Labels of part `part` (zero-based), ascending.
  std::vector<int> part_labels(std::size_t part) const;
  int first_label(std::size_t part) const { return offsets_.at(part) + 1; }

  /// n = 3 with r1 >= 2, or n >= 4.
  bool in_supported_family() const;

  bool operator==(const PartitionSpec& other) const { return parts_ == other.parts_; }

 private:
  std::vector<int> parts_;
  std::vector<int> offsets_;
  std::size_t vertex_count_ = 0;
};

/// Exhaustive predicates refuse graphs with more vertices than this.
struct EnumerationLimits {
  std::size_t max_vertices = 20;
};

Graph build_complete_multipartite(const PartitionSpec& spec);

/// Subsets refer to labels of g; components are sorted by smallest label.
std::vector<VertexSubset> connected_components(const Graph& g, const VertexSubset& induced_on);
bool is_bipartite(const Graph& g, const VertexSubset& induced_on);
bool is_independent(const Graph& g, const VertexSubset& s);
VertexSubset neighborhood(const Graph& g, const VertexSubset& s);
VertexSubset all_vertices(const Graph& g);

/// Vertices v such that every component of G \ v is non-bipartite.
VertexSubset regular_vertices(const Graph& g);

/// Nonempty independent T with B(T) connected and either T ∪ N(T) = V or
/// every component of G \ (T ∪ N(T)) non-bipartite. Sorted.
std::vector<VertexSubset> fundamental_sets(const Graph& g, EnumerationLimits limits = {});

/// True iff every two vertex-disjoint odd cycles are joined by an edge.
bool satisfies_odd_cycle_condition(const Graph& g, EnumerationLimits limits = {});

/// True iff T ∪ N(T) with the edges between T and N(T) forms a connected graph.
bool bipartite_shadow_connected(const Graph& g, const VertexSubset& t);

}  // namespace edgering
