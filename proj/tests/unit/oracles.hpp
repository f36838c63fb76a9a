#pragma once

// Brute-force reference implementations used to cross-check the library.
// Everything here is deliberately naive and shares no code paths with core/.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "edgering/graph.hpp"
#include "edgering/integer_matrix.hpp"
#include "edgering/numeric.hpp"
#include "edgering/poset.hpp"

namespace oracle {

using edgering::Integer;
using edgering::IntegerMatrix;
using edgering::IntVector;
using edgering::Rational;
using edgering::RationalVector;

// ---------------------------------------------------------------------------
// Integer matrices

/// Laplace expansion along the first row.
inline Integer laplace_determinant(const std::vector<std::vector<Integer>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    std::vector<std::vector<Integer>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(a[r][k]);
      }
      minor.push_back(std::move(row));
    }
    const Integer term = a[0][c] * laplace_determinant(minor);
    total += (c % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  if (k > n) return;
  while (true) {
    f(pick);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

/// Invariant factors from determinantal divisors: D_k is the gcd of all k x k
/// minors and the k-th factor is D_k / D_{k-1}. Only the nonzero ones.
inline std::vector<Integer> determinantal_invariant_factors(const IntegerMatrix& m) {
  std::vector<Integer> factors;
  Integer previous = 1;
  const std::size_t top = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= top; ++k) {
    Integer g = 0;
    for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        std::vector<std::vector<Integer>> a(k, std::vector<Integer>(k));
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) a[i][j] = m(rows[i], cols[j]);
        }
        g = edgering::gcd(g, laplace_determinant(a));
      });
    });
    if (g == 0) break;
    factors.push_back(g / previous);
    previous = g;
  }
  return factors;
}

inline IntegerMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  std::uniform_int_distribution<int> entry(lo, hi);
  IntegerMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(rng);
  }
  return m;
}

// ---------------------------------------------------------------------------
// Graphs on bitmasks

struct SmallGraph {
  int n = 0;
  std::vector<std::uint32_t> adj;  // adj[v] has bit u set iff uv is an edge (0-based)
};

inline SmallGraph to_small(const edgering::Graph& g) {
  SmallGraph s;
  s.n = static_cast<int>(g.vertex_count());
  s.adj.assign(s.n, 0);
  for (const edgering::Edge& e : g.edges()) {
    s.adj[e.a - 1] |= 1u << (e.b - 1);
    s.adj[e.b - 1] |= 1u << (e.a - 1);
  }
  return s;
}

inline edgering::Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<edgering::Edge> edges;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (coin(rng)) edges.push_back({a, b});
    }
  }
  return edgering::Graph(static_cast<std::size_t>(n), edges);
}

/// Vertex sets of all odd simple cycles, found by DFS from each cycle's
/// smallest vertex.
inline std::set<std::uint32_t> odd_cycle_vertex_sets(const SmallGraph& g) {
  std::set<std::uint32_t> found;
  for (int start = 0; start < g.n; ++start) {
    std::function<void(int, std::uint32_t, int)> walk = [&](int v, std::uint32_t used, int length) {
      for (int u = start; u < g.n; ++u) {
        if (!(g.adj[v] >> u & 1u)) continue;
        if (u == start && length >= 3 && length % 2 == 1) found.insert(used);
        if (u <= start || (used >> u & 1u)) continue;
        walk(u, used | (1u << u), length + 1);
      }
    };
    walk(start, 1u << start, 1);
  }
  return found;
}

inline bool odd_cycle_condition(const edgering::Graph& graph) {
  const SmallGraph g = to_small(graph);
  const std::set<std::uint32_t> cycles = odd_cycle_vertex_sets(g);
  for (std::uint32_t c1 : cycles) {
    for (std::uint32_t c2 : cycles) {
      if (c1 & c2) continue;
      bool joined = false;
      for (int v = 0; v < g.n; ++v) {
        if ((c1 >> v & 1u) && (g.adj[v] & c2)) joined = true;
      }
      if (!joined) return false;
    }
  }
  return true;
}

/// Components of the subgraph induced on `mask`.
inline std::vector<std::uint32_t> components(const SmallGraph& g, std::uint32_t mask) {
  std::vector<std::uint32_t> out;
  std::uint32_t left = mask;
  while (left) {
    std::uint32_t comp = left & (~left + 1);
    std::uint32_t frontier = comp;
    while (frontier) {
      std::uint32_t next = 0;
      for (int v = 0; v < g.n; ++v) {
        if (frontier >> v & 1u) next |= g.adj[v];
      }
      next &= mask & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

/// Two-colouring by brute force over all colourings of the component.
inline bool bipartite_brute(const SmallGraph& g, std::uint32_t mask) {
  std::vector<int> verts;
  for (int v = 0; v < g.n; ++v) {
    if (mask >> v & 1u) verts.push_back(v);
  }
  const std::size_t k = verts.size();
  for (std::uint64_t colouring = 0; colouring < (std::uint64_t{1} << k); ++colouring) {
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      for (std::size_t j = i + 1; j < k && ok; ++j) {
        if ((g.adj[verts[i]] >> verts[j] & 1u) && ((colouring >> i & 1u) == (colouring >> j & 1u))) ok = false;
      }
    }
    if (ok) return true;
  }
  return false;
}

inline std::uint32_t neighbourhood(const SmallGraph& g, std::uint32_t t) {
  std::uint32_t n = 0;
  for (int v = 0; v < g.n; ++v) {
    if (t >> v & 1u) n |= g.adj[v];
  }
  return n;
}

/// Fundamental sets straight from the definition, as sorted 1-based label lists.
inline std::vector<std::vector<int>> fundamental_sets(const edgering::Graph& graph) {
  const SmallGraph g = to_small(graph);
  const std::uint32_t all = g.n == 32 ? ~0u : (1u << g.n) - 1;
  std::vector<std::vector<int>> out;
  for (std::uint32_t t = 1; t <= all && t != 0; ++t) {
    const std::uint32_t nt = neighbourhood(g, t);
    if (nt & t) continue;  // not independent
    // B(T): vertices T ∪ N(T), only edges between T and N(T).
    SmallGraph b = g;
    for (int v = 0; v < g.n; ++v) {
      if (t >> v & 1u) {
        b.adj[v] &= nt;
      } else if (nt >> v & 1u) {
        b.adj[v] &= t;
      } else {
        b.adj[v] = 0;
      }
    }
    if (components(b, t | nt).size() != 1) continue;
    const std::uint32_t rest = all & ~(t | nt);
    bool ok = true;
    for (std::uint32_t comp : components(g, rest)) {
      if (bipartite_brute(g, comp)) ok = false;
    }
    if (!ok) continue;
    std::vector<int> labels;
    for (int v = 0; v < g.n; ++v) {
      if (t >> v & 1u) labels.push_back(v + 1);
    }
    out.push_back(labels);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<int> regular_vertices(const edgering::Graph& graph) {
  const SmallGraph g = to_small(graph);
  const std::uint32_t all = (1u << g.n) - 1;
  std::vector<int> out;
  for (int v = 0; v < g.n; ++v) {
    bool ok = true;
    for (std::uint32_t comp : components(g, all & ~(1u << v))) {
      if (bipartite_brute(g, comp)) ok = false;
    }
    if (ok) out.push_back(v + 1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Conic classes

/// tau_{d+j} as integer coefficient rows, recomputed from the part sizes.
inline std::vector<std::vector<long>> tau_tail(const std::vector<int>& parts) {
  const int d = std::accumulate(parts.begin(), parts.end(), 0);
  const std::size_t n = parts.size();
  std::vector<std::vector<long>> rows(n, std::vector<long>(d, 0));
  std::vector<int> part_of;
  for (std::size_t i = 0; i < n; ++i) part_of.insert(part_of.end(), parts[i], static_cast<int>(i));
  for (std::size_t j = 0; j < n; ++j) {
    for (int k = 0; k < d; ++k) {
      if (part_of[k] != static_cast<int>(n) - 1) rows[j][k] += 1;
      if (part_of[k] == static_cast<int>(j)) rows[j][k] -= 1;
    }
    rows[j][d - 1] -= 1;
  }
  return rows;
}

inline long ceil_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a > 0) == (b > 0))) ++q;
  return q;
}

/// All c = ceil(tau_tail(x)) for x on the grid {-k/q : 0 <= k < q}^d. Every
/// such c is a conic class with x as its witness.
inline std::set<IntVector> conic_classes_on_grid(const std::vector<int>& parts, int q) {
  const auto rows = tau_tail(parts);
  const std::size_t d = rows.front().size();
  std::set<IntVector> out;
  std::vector<long> k(d, 0);
  while (true) {
    IntVector c;
    for (const auto& row : rows) {
      long s = 0;
      for (std::size_t i = 0; i < d; ++i) s -= row[i] * k[i];
      c.push_back(ceil_div(s, q));
    }
    out.insert(c);
    std::size_t i = 0;
    while (i < d && ++k[i] == q) k[i++] = 0;
    if (i == d) break;
  }
  return out;
}

struct Row {
  std::vector<long> coefficients;
  long lower = 0;
  long upper = 0;
  auto operator<=>(const Row&) const = default;
};

/// The explicit inequality lists for three and four parts, typed in by hand.
inline std::set<Row> hand_region(const std::vector<int>& r) {
  std::set<Row> rows;
  const std::size_t n = r.size();
  auto unit = [&](std::initializer_list<std::pair<std::size_t, long>> terms) {
    std::vector<long> v(n, 0);
    for (auto [i, value] : terms) v[i - 1] = value;
    return v;
  };
  auto R = [&](std::size_t i) { return static_cast<long>(r[i - 1]); };
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) rows.insert({unit({{i, 1}, {j, -1}}), -R(j), R(i)});
  }
  if (n == 3) {
    rows.insert({unit({{1, 1}}), -R(2) + 1, 1});
    rows.insert({unit({{2, 1}}), -R(1) + 1, 1});
    rows.insert({unit({{1, 1}, {2, 1}, {3, -1}}), -R(3) + 1, 1});
  } else if (n == 4) {
    for (std::size_t i = 1; i <= 3; ++i) {
      long s = 0;
      for (std::size_t j = 1; j <= 3; ++j) {
        if (j != i) s += R(j);
      }
      rows.insert({unit({{i, 1}}), -s + 1, 1});
    }
    for (std::size_t k = 1; k <= 3; ++k) {
      std::vector<std::size_t> ij;
      for (std::size_t t = 1; t <= 3; ++t) {
        if (t != k) ij.push_back(t);
      }
      rows.insert({unit({{ij[0], 1}, {ij[1], 1}, {k, -1}}), -2 * R(k), 2});
      rows.insert({unit({{ij[0], 1}, {ij[1], 1}, {4, -1}}), -R(k) - R(4) + 1, 1});
    }
    rows.insert({unit({{1, 1}, {2, 1}, {3, 1}, {4, -2}}), -2 * R(4), 2});
  }
  return rows;
}

/// The eight closed-form vertices for three parts (may coincide for small r).
inline std::set<RationalVector> n3_vertices(long r1, long r2, long r3) {
  auto v = [](long a, long b, long c) { return RationalVector{Rational(a), Rational(b), Rational(c)}; };
  return {v(1, 1, 1),
          v(1, 1, r3 + 1),
          v(1, -r1 + 1, -r1 + r3 + 1),
          v(-r2 + 1, 1, -r2 + r3 + 1),
          v(-r2 + 1, -r1 + 1, -r1 - r2 + 1),
          v(-r2 + 1, -r1 + 1, -r1 - r2 + r3 + 1),
          v(1, -r1 + 1, -r1 + 1),
          v(-r2 + 1, 1, -r2 + 1)};
}

/// tau_i = e_i for i <= d forces x = (1,...,1); check the remaining forms.
inline bool gorenstein_closed_form(const std::vector<int>& parts) {
  for (const auto& row : tau_tail(parts)) {
    if (std::accumulate(row.begin(), row.end(), 0L) != 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Posets

inline bool is_down_set(const edgering::Poset& p, std::uint64_t s) {
  for (int b = 1; b <= static_cast<int>(p.size()); ++b) {
    if (!(s >> (b - 1) & 1u)) continue;
    for (int a = 1; a <= static_cast<int>(p.size()); ++a) {
      if (p.less(a, b) && !(s >> (a - 1) & 1u)) return false;
    }
  }
  return true;
}

inline bool is_antichain(const edgering::Poset& p, std::uint64_t s) {
  for (int a = 1; a <= static_cast<int>(p.size()); ++a) {
    for (int b = a + 1; b <= static_cast<int>(p.size()); ++b) {
      if ((s >> (a - 1) & 1u) && (s >> (b - 1) & 1u) && p.comparable(a, b)) return false;
    }
  }
  return true;
}

inline std::vector<std::vector<int>> indicator_vectors(const edgering::Poset& p,
                                                       const std::function<bool(const edgering::Poset&, std::uint64_t)>& keep) {
  std::vector<std::vector<int>> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << p.size()); ++s) {
    if (!keep(p, s)) continue;
    std::vector<int> x(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) x[i] = static_cast<int>(s >> i & 1u);
    out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::vector<int>> ideals(const edgering::Poset& p) { return indicator_vectors(p, is_down_set); }
inline std::vector<std::vector<int>> antichains(const edgering::Poset& p) { return indicator_vectors(p, is_antichain); }

/// Embedding of the five-element X-shape: z with a, b < z < c, d where a, b
/// and c, d are incomparable pairs.
inline bool has_x_shape(const edgering::Poset& p) {
  const int n = static_cast<int>(p.size());
  for (int z = 1; z <= n; ++z) {
    for (int a = 1; a <= n; ++a) {
      for (int b = a + 1; b <= n; ++b) {
        if (!p.less(a, z) || !p.less(b, z) || p.comparable(a, b)) continue;
        for (int c = 1; c <= n; ++c) {
          for (int e = c + 1; e <= n; ++e) {
            if (p.less(z, c) && p.less(z, e) && !p.comparable(c, e)) return true;
          }
        }
      }
    }
  }
  return false;
}

}  // namespace oracle
