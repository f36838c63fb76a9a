#include "edgering/graph.hpp"

#include "edgering/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <numeric>
#include <string>

namespace edgering {
namespace {

using Mask = std::uint64_t;

constexpr std::size_t kMaxMaskVertices = 62;

void check_limits(const Graph& g, const EnumerationLimits& limits, const char* what) {
  if (limits.max_vertices > kMaxMaskVertices) {
    throw InvalidArgument(std::string(what) + ": enumeration bound above " +
                          std::to_string(kMaxMaskVertices) + " is not supported");
  }
  if (g.vertex_count() > limits.max_vertices) {
    throw EnumerationLimit(std::string(what) + ": graph has " +
                           std::to_string(g.vertex_count()) + " vertices, bound is " +
                           std::to_string(limits.max_vertices));
  }
}

// Bit v-1 stands for label v.
std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.a - 1] |= Mask{1} << (e.b - 1);
    adj[e.b - 1] |= Mask{1} << (e.a - 1);
  }
  return adj;
}

Mask neighborhood_mask(const std::vector<Mask>& adj, Mask s) {
  Mask out = 0;
  for (Mask rest = s; rest != 0; rest &= rest - 1) out |= adj[std::countr_zero(rest)];
  return out;
}

// Every component of the subgraph induced on `s` contains an odd cycle.
bool all_components_odd(const std::vector<Mask>& adj, Mask s) {
  Mask unseen = s;
  while (unseen != 0) {
    const int root = std::countr_zero(unseen);
    // BFS with 2-coloring restricted to s.
    Mask side[2] = {Mask{1} << root, 0};
    Mask frontier = Mask{1} << root;
    Mask component = frontier;
    int colour = 0;
    bool odd = false;
    while (frontier != 0) {
      const Mask next = neighborhood_mask(adj, frontier) & s;
      if (next & side[colour]) odd = true;
      const Mask fresh = next & ~component;
      colour ^= 1;
      side[colour] |= fresh;
      component |= fresh;
      frontier = fresh;
    }
    if (side[0] & side[1]) odd = true;
    if (!odd) return false;
    unseen &= ~component;
  }
  return true;
}

bool mask_is_cycle(const std::vector<Mask>& adj, Mask s) {
  for (Mask rest = s; rest != 0; rest &= rest - 1) {
    if (std::popcount(adj[std::countr_zero(rest)] & s) != 2) return false;
  }
  // 2-regular and connected means a single cycle.
  Mask reached = s & (~s + 1);
  Mask frontier = reached;
  while (frontier != 0) {
    const Mask fresh = neighborhood_mask(adj, frontier) & s & ~reached;
    reached |= fresh;
    frontier = fresh;
  }
  return reached == s;
}

VertexSubset subset_from_mask(Mask m) {
  std::vector<int> labels;
  for (Mask rest = m; rest != 0; rest &= rest - 1) labels.push_back(std::countr_zero(rest) + 1);
  return VertexSubset(std::move(labels));
}

}  // namespace

Edge make_edge(int u, int v) {
  if (u == v) throw InvalidArgument("loop at vertex " + std::to_string(u));
  return u < v ? Edge{u, v} : Edge{v, u};
}

VertexSubset::VertexSubset(std::vector<int> labels) : members(std::move(labels)) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
}

bool VertexSubset::contains(int v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ == 0) throw InvalidArgument("graph must have at least one vertex");
  const int d = static_cast<int>(vertex_count_);
  for (Edge& e : edges_) {
    if (e.a == e.b) throw InvalidArgument("loop at vertex " + std::to_string(e.a));
    if (e.a > e.b) std::swap(e.a, e.b);
    if (e.a < 1 || e.b > d) {
      throw InvalidArgument("edge {" + std::to_string(e.a) + "," + std::to_string(e.b) +
                            "} has a label outside 1.." + std::to_string(d));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw InvalidArgument("multiple edges are not allowed");
  }
  adjacency_.assign(vertex_count_ + 1, std::vector<char>(vertex_count_ + 1, 0));
  for (const Edge& e : edges_) {
    adjacency_[e.a][e.b] = 1;
    adjacency_[e.b][e.a] = 1;
  }
}

bool Graph::adjacent(int u, int v) const {
  const int d = static_cast<int>(vertex_count_);
  if (u < 1 || v < 1 || u > d || v > d) return false;
  return adjacency_[u][v] != 0;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (int w = 1; w <= static_cast<int>(vertex_count_); ++w) {
    if (adjacent(v, w)) out.push_back(w);
  }
  return out;
}

std::size_t Graph::edge_index(const Edge& e) const {
  const Edge key = make_edge(e.a, e.b);
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) {
    throw InvalidArgument("{" + std::to_string(e.a) + "," + std::to_string(e.b) +
                          "} is not an edge");
  }
  return static_cast<std::size_t>(it - edges_.begin());
}

PartitionSpec::PartitionSpec(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InvalidArgument("partition must have at least one part");
  int offset = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InvalidArgument("part sizes must be positive");
    if (i > 0 && parts_[i] < parts_[i - 1]) {
      throw InvalidArgument("part sizes must be nondecreasing");
    }
    offsets_.push_back(offset);
    offset += parts_[i];
  }
  vertex_count_ = static_cast<std::size_t>(offset);
}

std::size_t PartitionSpec::part_of(int label) const {
  if (label < 1 || label > static_cast<int>(vertex_count_)) {
    throw InvalidArgument("label " + std::to_string(label) + " out of range");
  }
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), label - 1);
  return static_cast<std::size_t>(it - offsets_.begin()) - 1;
}

std::vector<int> PartitionSpec::part_labels(std::size_t part) const {
  std::vector<int> labels(static_cast<std::size_t>(parts_.at(part)));
  std::iota(labels.begin(), labels.end(), offsets_[part] + 1);
  return labels;
}

bool PartitionSpec::in_supported_family() const {
  const std::size_t n = parts_.size();
  return (n == 3 && parts_[0] >= 2) || n >= 4;
}

Graph build_complete_multipartite(const PartitionSpec& spec) {
  std::vector<Edge> edges;
  const int d = static_cast<int>(spec.vertex_count());
  for (int a = 1; a <= d; ++a) {
    for (int b = a + 1; b <= d; ++b) {
      if (spec.part_of(a) != spec.part_of(b)) edges.push_back({a, b});
    }
  }
  return Graph(spec.vertex_count(), std::move(edges));
}

VertexSubset all_vertices(const Graph& g) {
  std::vector<int> labels(g.vertex_count());
  std::iota(labels.begin(), labels.end(), 1);
  return VertexSubset(std::move(labels));
}

std::vector<VertexSubset> connected_components(const Graph& g, const VertexSubset& induced_on) {
  std::vector<VertexSubset> components;
  std::vector<char> seen(g.vertex_count() + 1, 0);
  for (int root : induced_on.members) {
    if (seen[root]) continue;
    std::vector<int> members;
    std::deque<int> queue{root};
    seen[root] = 1;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      members.push_back(v);
      for (int w : g.neighbors(v)) {
        if (!seen[w] && induced_on.contains(w)) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    components.emplace_back(std::move(members));
  }
  return components;
}

bool is_bipartite(const Graph& g, const VertexSubset& induced_on) {
  std::vector<int> colour(g.vertex_count() + 1, -1);
  for (int root : induced_on.members) {
    if (colour[root] >= 0) continue;
    colour[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(v)) {
        if (!induced_on.contains(w)) continue;
        if (colour[w] < 0) {
          colour[w] = 1 - colour[v];
          queue.push_back(w);
        } else if (colour[w] == colour[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_independent(const Graph& g, const VertexSubset& s) {
  for (std::size_t i = 0; i < s.members.size(); ++i) {
    for (std::size_t j = i + 1; j < s.members.size(); ++j) {
      if (g.adjacent(s.members[i], s.members[j])) return false;
    }
  }
  return true;
}

VertexSubset neighborhood(const Graph& g, const VertexSubset& s) {
  std::vector<int> out;
  for (int v : s.members) {
    for (int w : g.neighbors(v)) out.push_back(w);
  }
  return VertexSubset(std::move(out));
}

VertexSubset regular_vertices(const Graph& g) {
  std::vector<int> regular;
  const VertexSubset everything = all_vertices(g);
  for (int v : everything.members) {
    std::vector<int> rest;
    for (int w : everything.members) {
      if (w != v) rest.push_back(w);
    }
    const VertexSubset remainder(std::move(rest));
    bool every_component_odd = true;
    for (const VertexSubset& component : connected_components(g, remainder)) {
      if (is_bipartite(g, component)) {
        every_component_odd = false;
        break;
      }
    }
    if (every_component_odd) regular.push_back(v);
  }
  return VertexSubset(std::move(regular));
}

bool bipartite_shadow_connected(const Graph& g, const VertexSubset& t) {
  if (t.empty()) return false;
  const VertexSubset nbrs = neighborhood(g, t);
  std::vector<int> all = t.members;
  all.insert(all.end(), nbrs.members.begin(), nbrs.members.end());
  const VertexSubset vertices(all);
  std::vector<char> seen(g.vertex_count() + 1, 0);
  std::deque<int> queue{t.members.front()};
  seen[t.members.front()] = 1;
  std::size_t reached = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    ++reached;
    const bool in_t = t.contains(v);
    for (int w : g.neighbors(v)) {
      if (seen[w] || !vertices.contains(w)) continue;
      // Only edges with one end in T and the other in N(T).
      const bool ok = in_t ? nbrs.contains(w) : t.contains(w);
      if (!ok) continue;
      seen[w] = 1;
      queue.push_back(w);
    }
  }
  return reached == vertices.size();
}

std::vector<VertexSubset> fundamental_sets(const Graph& g, EnumerationLimits limits) {
  check_limits(g, limits, "fundamental_sets");
  const auto adj = adjacency_masks(g);
  const std::size_t d = g.vertex_count();
  const Mask full = (d == 64) ? ~Mask{0} : ((Mask{1} << d) - 1);
  std::vector<VertexSubset> result;
  for (Mask t = 1; t <= full; ++t) {
    if (neighborhood_mask(adj, t) & t) continue;  // not independent
    const Mask nbrs = neighborhood_mask(adj, t);
    const Mask shadow = t | nbrs;
    // B(T) connectivity: alternate between T and N(T).
    Mask reached = t & (~t + 1);
    Mask frontier = reached;
    while (frontier != 0) {
      Mask fresh = 0;
      for (Mask rest = frontier; rest != 0; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        const Mask side = (t >> v) & 1 ? nbrs : t;
        fresh |= adj[v] & side;
      }
      fresh &= ~reached;
      reached |= fresh;
      frontier = fresh;
    }
    if (reached != shadow) continue;
    if (shadow != full && !all_components_odd(adj, full & ~shadow)) continue;
    result.push_back(subset_from_mask(t));
  }
  std::sort(result.begin(), result.end());
  return result;
}

bool satisfies_odd_cycle_condition(const Graph& g, EnumerationLimits limits) {
  check_limits(g, limits, "satisfies_odd_cycle_condition");
  const auto adj = adjacency_masks(g);
  const std::size_t d = g.vertex_count();
  const Mask full = (d == 64) ? ~Mask{0} : ((Mask{1} << d) - 1);
  // Every odd cycle contains a chordless odd cycle on a subset of its
  // vertices, so it suffices to range over chordless odd cycles S and look
  // for an odd cycle avoiding S and its neighbourhood.
  for (Mask s = 1; s <= full; ++s) {
    const int size = std::popcount(s);
    if (size < 3 || size % 2 == 0) continue;
    if (!mask_is_cycle(adj, s)) continue;
    const Mask far = full & ~(s | neighborhood_mask(adj, s));
    if (far == 0) continue;
    // Any non-bipartite component of the far side holds a disjoint odd cycle
    // with no edge back to S.
    Mask unseen = far;
    while (unseen != 0) {
      Mask component = unseen & (~unseen + 1);
      Mask frontier = component;
      while (frontier != 0) {
        const Mask fresh = neighborhood_mask(adj, frontier) & far & ~component;
        component |= fresh;
        frontier = fresh;
      }
      if (!all_components_odd(adj, component)) {
        unseen &= ~component;
        continue;
      }
      return false;
    }
  }
  return true;
}

}  // namespace edgering
