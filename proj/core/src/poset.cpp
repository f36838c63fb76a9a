#include "edgering/poset.hpp"

#include "edgering/errors.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace edgering {
namespace {

constexpr std::size_t kMaxPosetSize = 62;

void check_limit(std::size_t size, const EnumerationLimits& limits, const char* what) {
  if (size > limits.max_vertices) {
    throw EnumerationLimit(std::string(what) + ": poset has " + std::to_string(size) +
                           " elements, above the enumeration bound " +
                           std::to_string(limits.max_vertices));
  }
}

LatticePoint indicator(std::uint64_t mask, std::size_t size) {
  LatticePoint out(size, 0);
  for (std::size_t i = 0; i < size; ++i) out[i] = static_cast<int>(mask >> i & 1u);
  return out;
}

std::uint64_t mask_of(const LatticePoint& x) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i]) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

bool is_antichain_mask(const Poset& p, std::uint64_t mask) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if ((mask >> i & 1u) && (p.below_mask(static_cast<int>(i + 1)) & mask)) return false;
  }
  return true;
}

Graph graph_from_parts(const std::vector<std::vector<int>>& parts, std::size_t vertex_count) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      for (int a : parts[i]) {
        for (int b : parts[j]) edges.push_back(make_edge(a, b));
      }
    }
  }
  return Graph(vertex_count, std::move(edges));
}

std::vector<int> range(int from, int to) {
  std::vector<int> out;
  for (int v = from; v <= to; ++v) out.push_back(v);
  return out;
}

}  // namespace

Poset::Poset(std::size_t size, const std::vector<std::pair<int, int>>& relations)
    : size_(size), below_(size, 0), above_(size, 0) {
  if (size == 0) throw InvalidArgument("Poset: size must be positive");
  if (size > kMaxPosetSize) throw InvalidArgument("Poset: at most 62 elements are supported");
  for (const auto& [a, b] : relations) {
    if (a < 1 || b < 1 || a > static_cast<int>(size) || b > static_cast<int>(size)) {
      throw InvalidArgument("Poset: element out of range");
    }
    if (a == b) throw InvalidArgument("Poset: relation is not irreflexive");
    below_[b - 1] |= std::uint64_t{1} << (a - 1);
  }
  // Warshall closure on bitmasks.
  for (std::size_t k = 0; k < size; ++k) {
    for (std::size_t i = 0; i < size; ++i) {
      if (below_[i] >> k & 1u) below_[i] |= below_[k];
    }
  }
  for (std::size_t i = 0; i < size; ++i) {
    if (below_[i] >> i & 1u) throw InvalidArgument("Poset: relations contain a cycle");
    for (std::size_t j = 0; j < size; ++j) {
      if (below_[i] >> j & 1u) above_[j] |= std::uint64_t{1} << i;
    }
  }
}

std::vector<std::pair<int, int>> Poset::relations() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= static_cast<int>(size_); ++a) {
    for (int b = 1; b <= static_cast<int>(size_); ++b) {
      if (less(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<std::pair<int, int>> Poset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& [a, b] : relations()) {
    if ((above_[a - 1] & below_[b - 1]) == 0) out.emplace_back(a, b);
  }
  return out;
}

Poset chain_pair_poset(int m, int n, bool with_extra) {
  if (m < 1 || n < 1) throw InvalidArgument("chain_pair_poset: m and n must be positive");
  std::vector<std::pair<int, int>> relations;
  for (int i = 1; i < m; ++i) relations.emplace_back(i, i + 1);
  for (int j = m + 1; j < m + n; ++j) relations.emplace_back(j, j + 1);
  if (with_extra) relations.emplace_back(1, m + n);
  return Poset(static_cast<std::size_t>(m + n), relations);
}

Poset x_shape_poset() { return Poset(5, {{1, 3}, {2, 3}, {3, 4}, {3, 5}}); }

PosetPolytope order_polytope_vertices(const Poset& p, EnumerationLimits limits) {
  check_limit(p.size(), limits, "order_polytope_vertices");
  PosetPolytope out;
  out.kind = PolytopeKind::Order;
  const std::uint64_t end = std::uint64_t{1} << p.size();
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    bool ideal = true;
    for (std::size_t i = 0; i < p.size() && ideal; ++i) {
      if ((mask >> i & 1u) && (p.below_mask(static_cast<int>(i + 1)) & ~mask)) ideal = false;
    }
    if (!ideal) continue;
    LatticePoint x = indicator(mask, p.size());
    if (!satisfies_order_inequalities(p, x)) {
      throw ContractViolation("order_polytope_vertices: ideal violates the order inequalities");
    }
    out.vertices.push_back(std::move(x));
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

PosetPolytope chain_polytope_vertices(const Poset& p, EnumerationLimits limits) {
  check_limit(p.size(), limits, "chain_polytope_vertices");
  PosetPolytope out;
  out.kind = PolytopeKind::Chain;
  const std::uint64_t end = std::uint64_t{1} << p.size();
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    if (!is_antichain_mask(p, mask)) continue;
    LatticePoint x = indicator(mask, p.size());
    if (!satisfies_chain_inequalities(p, x)) {
      throw ContractViolation("chain_polytope_vertices: antichain violates the chain inequalities");
    }
    out.vertices.push_back(std::move(x));
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

bool satisfies_order_inequalities(const Poset& p, const LatticePoint& x) {
  if (x.size() != p.size()) return false;
  for (int v : x) {
    if (v < 0 || v > 1) return false;
  }
  for (const auto& [a, b] : p.relations()) {
    if (x[a - 1] < x[b - 1]) return false;
  }
  return true;
}

std::vector<std::vector<int>> maximal_chains(const Poset& p) {
  const auto covers = p.covers();
  std::map<int, std::vector<int>> up;
  for (const auto& [a, b] : covers) up[a].push_back(b);
  std::vector<std::vector<int>> out;
  std::vector<int> chain;
  auto extend = [&](auto&& self, int top) -> void {
    chain.push_back(top);
    auto it = up.find(top);
    if (it == up.end()) {
      out.push_back(chain);
    } else {
      for (int next : it->second) self(self, next);
    }
    chain.pop_back();
  };
  for (int v = 1; v <= static_cast<int>(p.size()); ++v) {
    if (p.below_mask(v) == 0) extend(extend, v);
  }
  return out;
}

bool satisfies_chain_inequalities(const Poset& p, const LatticePoint& x) {
  if (x.size() != p.size()) return false;
  for (int v : x) {
    if (v < 0) return false;
  }
  for (const auto& chain : maximal_chains(p)) {
    int total = 0;
    for (int v : chain) total += x[v - 1];
    if (total > 1) return false;
  }
  return true;
}

bool contains_x_shape(const Poset& p, EnumerationLimits limits) {
  check_limit(p.size(), limits, "contains_x_shape");
  auto has_incomparable_pair = [&](std::uint64_t mask) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (!(mask >> i & 1u)) continue;
      const int a = static_cast<int>(i + 1);
      const std::uint64_t related = p.below_mask(a) | p.above_mask(a) | (std::uint64_t{1} << i);
      if (mask & ~related) return true;
    }
    return false;
  };
  for (int z = 1; z <= static_cast<int>(p.size()); ++z) {
    if (has_incomparable_pair(p.below_mask(z)) && has_incomparable_pair(p.above_mask(z))) return true;
  }
  return false;
}

std::string to_string(HibiVariant variant) {
  return variant == HibiVariant::Bipartite ? "bipartite" : "one-singleton";
}

IntegerMatrix one_singleton_matrix(int m, int n) {
  const std::size_t size = static_cast<std::size_t>(m + n);
  IntegerMatrix a = IntegerMatrix::identity(size);
  for (int c = 2; c <= m; ++c) a(0, c - 1) = 1;
  for (int c = m + 1; c < m + n; ++c) a(size - 1, c - 1) = 1;
  return a;
}

HibiReductionReport verify_hibi_reduction(int m, int n, HibiVariant variant, EnumerationLimits limits) {
  if (m < 1 || n < 1) throw InvalidArgument("verify_hibi_reduction: m and n must be positive");
  HibiReductionReport report;
  report.variant = variant;
  report.m = m;
  report.n = n;
  const std::size_t target_dim = static_cast<std::size_t>(m + n);
  check_limit(target_dim, limits, "verify_hibi_reduction");

  const bool bipartite = variant == HibiVariant::Bipartite;
  const Poset poset = chain_pair_poset(m, n, !bipartite);
  const Graph g = bipartite
                      ? graph_from_parts({range(1, m + 1), range(m + 2, m + n + 2)},
                                         static_cast<std::size_t>(m + n + 2))
                      : graph_from_parts({range(1, m), range(m + 1, m + n), {m + n + 1}},
                                         static_cast<std::size_t>(m + n + 1));
  const EdgePolytope polytope = edge_polytope(g);
  const IntegerMatrix a = one_singleton_matrix(m, n);
  // The projection is unimodular on the lattice it lands in; diag(-1,1,...,1,-1)
  // has determinant 1, so only A contributes.
  report.linear_determinant = bipartite ? Integer(1) : determinant(a);

  std::set<LatticePoint> images;
  report.images_are_antichains = true;
  for (std::size_t k = 0; k < polytope.edges.size(); ++k) {
    const LatticePoint& point = polytope.lattice_points[k];
    LatticePoint image;
    if (bipartite) {
      for (std::size_t i = 0; i < point.size(); ++i) {
        if (i + 1 == static_cast<std::size_t>(m + 1) || i + 1 == static_cast<std::size_t>(m + n + 2)) continue;
        image.push_back(point[i]);
      }
    } else {
      IntVector projected(point.begin(), point.end() - 1);
      IntVector mapped = a * projected;
      mapped.front() -= 1;
      mapped.back() -= 1;
      mapped.front() = -mapped.front();
      mapped.back() = -mapped.back();
      for (const Integer& v : mapped) image.push_back(static_cast<int>(to_int64(v)));
    }
    const bool zero_one = std::all_of(image.begin(), image.end(), [](int v) { return v == 0 || v == 1; });
    if (!zero_one || !is_antichain_mask(poset, mask_of(image))) report.images_are_antichains = false;
    images.insert(image);
    report.bijection.push_back({polytope.edges[k], std::move(image)});
  }

  const PosetPolytope chain = chain_polytope_vertices(poset, limits);
  report.antichain_count = chain.vertices.size();
  report.injective = images.size() == report.bijection.size();
  report.surjective = std::equal(images.begin(), images.end(), chain.vertices.begin(), chain.vertices.end());
  return report;
}

}  // namespace edgering
