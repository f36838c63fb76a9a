#include "edgering/class_group.hpp"

#include "edgering/edge_polytope.hpp"
#include "edgering/errors.hpp"
#include "edgering/smith.hpp"

#include <algorithm>
#include <set>

namespace edgering {
namespace {

GroupInvariants invariants_of_cokernel(const IntegerMatrix& relations) {
  const SmithDecomposition snf = smith_normal_form(relations);
  GroupInvariants out;
  out.relation_rank = snf.rank();
  out.diagonals = snf.diagonals;
  out.free_rank = relations.rows() - snf.rank();
  for (const Integer& value : snf.diagonals) {
    if (value > 1) out.torsion.push_back(value);
  }
  return out;
}

std::vector<std::size_t> preference_order(std::size_t d, std::size_t n, BasisConvention convention) {
  std::vector<std::size_t> vertices(d);
  std::vector<std::size_t> fundamentals(n);
  for (std::size_t i = 0; i < d; ++i) vertices[i] = i;
  for (std::size_t i = 0; i < n; ++i) fundamentals[i] = d + i;
  std::vector<std::size_t> order = convention == BasisConvention::FundamentalFirst ? fundamentals : vertices;
  const auto& rest = convention == BasisConvention::FundamentalFirst ? vertices : fundamentals;
  order.insert(order.end(), rest.begin(), rest.end());
  return order;
}

// Greedy choice of n divisors whose classes form a basis.
std::vector<std::size_t> choose_basis(const std::vector<IntVector>& images, std::size_t n,
                                      BasisConvention convention, std::size_t d) {
  std::vector<std::size_t> chosen;
  std::vector<IntVector> columns;
  for (std::size_t index : preference_order(d, n, convention)) {
    if (chosen.size() == n) break;
    columns.push_back(images[index]);
    if (columns_extend_to_basis(IntegerMatrix::from_columns(columns, n))) {
      chosen.push_back(index);
    } else {
      columns.pop_back();
    }
  }
  if (chosen.size() != n) {
    throw InvalidArgument("class_group: convention " + to_string(convention) +
                          " does not yield a basis of divisor classes");
  }
  return chosen;
}

// Raw divisor classes from the tau cokernel, in whatever basis SNF produced.
std::vector<IntVector> raw_divisor_images(const PartitionSpec& spec) {
  const IntegerMatrix tau = tau_system(spec).matrix();
  const CokernelPresentation presentation = cokernel(tau);
  if (!presentation.torsion.empty() || presentation.free_rank != spec.part_count()) {
    throw VerificationFailure("class_group: tau cokernel is not free of rank n");
  }
  std::vector<IntVector> images;
  for (std::size_t j = 0; j < tau.rows(); ++j) {
    IntVector unit(tau.rows());
    unit[j] = 1;
    images.push_back(presentation.project(unit));
  }
  return images;
}

std::vector<int> walk_vertices(const std::vector<Edge>& edges, int start, const std::string& what) {
  std::vector<int> walk{start};
  int current = start;
  for (const Edge& e : edges) {
    if (!e.contains(current)) throw InvalidArgument("dependency_witness: " + what + " is not a walk");
    current = e.other(current);
    walk.push_back(current);
  }
  return walk;
}

struct CycleData {
  int start = 0;
  std::vector<int> vertices;  // distinct, without the closing repeat
};

CycleData validate_cycle(const std::vector<Edge>& edges, bool want_odd, const std::string& what) {
  if (edges.size() < 3) throw InvalidArgument("dependency_witness: " + what + " is too short");
  if ((edges.size() % 2 == 1) != want_odd) {
    throw InvalidArgument("dependency_witness: " + what + " has the wrong parity");
  }
  const Edge& first = edges.front();
  const Edge& last = edges.back();
  int start = 0;
  if (last.contains(first.a) && !last.contains(first.b)) start = first.a;
  else if (last.contains(first.b) && !last.contains(first.a)) start = first.b;
  else throw InvalidArgument("dependency_witness: " + what + " has no start vertex");
  std::vector<int> walk = walk_vertices(edges, start, what);
  if (walk.back() != start) throw InvalidArgument("dependency_witness: " + what + " is not closed");
  walk.pop_back();
  const std::set<int> distinct(walk.begin(), walk.end());
  if (distinct.size() != walk.size()) throw InvalidArgument("dependency_witness: " + what + " is not simple");
  return {start, walk};
}

Integer alternating(std::size_t one_based_index) { return one_based_index % 2 == 0 ? 1 : -1; }

}  // namespace

namespace {

WeightVector weight_unchecked(const PartitionSpec& spec, const Edge& e) {
  const std::size_t d = spec.vertex_count();
  const std::size_t n = spec.part_count();
  WeightVector out;
  out.source_edge = e;
  out.entries.assign(d + n, 0);
  out.entries[e.a - 1] = 1;
  out.entries[e.b - 1] = 1;
  const std::size_t pa = spec.part_of(e.a);
  const std::size_t pb = spec.part_of(e.b);
  for (std::size_t i = 0; i < n; ++i) {
    if (i != pa && i != pb) out.entries[d + i] = 1;
  }
  return out;
}

}  // namespace

WeightVector weight_vector(const PartitionSpec& spec, const Edge& e) {
  require_supported(spec);
  const Graph g = build_complete_multipartite(spec);
  if (e.a < 1 || e.b > static_cast<int>(spec.vertex_count()) || !g.has_edge(e)) {
    throw InvalidArgument("weight_vector: not an edge of the graph");
  }
  return weight_unchecked(spec, e);
}

IntegerMatrix class_matrix(const PartitionSpec& spec) {
  require_supported(spec);
  const Graph g = build_complete_multipartite(spec);
  std::vector<IntVector> columns;
  for (const Edge& e : g.edges()) columns.push_back(weight_unchecked(spec, e).entries);
  return IntegerMatrix::from_columns(columns, spec.vertex_count() + spec.part_count());
}

std::string to_string(BasisConvention convention) {
  return convention == BasisConvention::FundamentalFirst ? "fundamental-first" : "vertex-first";
}

BasisConvention parse_convention(std::string_view text) {
  if (text == "fundamental-first") return BasisConvention::FundamentalFirst;
  if (text == "vertex-first") return BasisConvention::VertexFirst;
  throw InvalidArgument("unknown basis convention: " + std::string(text));
}

GroupInvariants class_group_from_class_matrix(const PartitionSpec& spec) {
  return invariants_of_cokernel(class_matrix(spec));
}

GroupInvariants class_group_from_tau(const PartitionSpec& spec) {
  return invariants_of_cokernel(tau_system(spec).matrix());
}

ClassGroupStructure class_group(const PartitionSpec& spec, BasisConvention convention) {
  const GroupInvariants via_matrix = class_group_from_class_matrix(spec);
  const GroupInvariants via_tau = class_group_from_tau(spec);
  if (!via_matrix.same_group(via_tau)) {
    throw VerificationFailure("class_group: class-matrix and tau-cokernel routes disagree");
  }
  const std::size_t n = spec.part_count();
  const std::size_t d = spec.vertex_count();
  if (via_matrix.free_rank != n || !via_matrix.torsion.empty()) {
    throw VerificationFailure("class_group: group is not free of rank n");
  }

  const std::vector<IntVector> raw = raw_divisor_images(spec);
  ClassGroupStructure out;
  out.free_rank = n;
  out.convention = convention;
  out.basis_divisors = choose_basis(raw, n, convention, d);

  std::vector<IntVector> chosen;
  for (std::size_t index : out.basis_divisors) chosen.push_back(raw[index]);
  const IntegerMatrix change = unimodular_inverse(IntegerMatrix::from_columns(chosen, n));
  for (const IntVector& beta : raw) out.divisor_images.push_back(change * beta);

  if (!divisor_relations_hold(spec, out.divisor_images)) {
    throw ContractViolation("class_group: divisor images violate the divisor relations");
  }
  return out;
}

std::vector<IntVector> divisor_relations(const PartitionSpec& spec) {
  const IntegerMatrix tau = tau_system(spec).matrix();
  std::vector<IntVector> rows;
  for (std::size_t k = 0; k < tau.cols(); ++k) rows.push_back(tau.column(k));
  return rows;
}

bool divisor_relations_hold(const PartitionSpec& spec, const std::vector<IntVector>& images) {
  const std::size_t n = spec.part_count();
  const auto relations = divisor_relations(spec);
  if (relations.empty() || images.size() != relations.front().size()) return false;
  for (const IntVector& relation : relations) {
    IntVector total(n);
    for (std::size_t j = 0; j < images.size(); ++j) {
      if (images[j].size() != n) return false;
      for (std::size_t c = 0; c < n; ++c) total[c] += relation[j] * images[j][c];
    }
    for (const Integer& value : total) {
      if (value != 0) return false;
    }
  }
  return true;
}

IntegerMatrix convention_transform(const PartitionSpec& spec) {
  const ClassGroupStructure ff = class_group(spec, BasisConvention::FundamentalFirst);
  const ClassGroupStructure vf = class_group(spec, BasisConvention::VertexFirst);
  const std::size_t n = spec.part_count();
  std::vector<IntVector> chosen;
  for (std::size_t index : vf.basis_divisors) chosen.push_back(ff.divisor_images[index]);
  const IntegerMatrix t = unimodular_inverse(IntegerMatrix::from_columns(chosen, n));
  for (std::size_t j = 0; j < ff.divisor_images.size(); ++j) {
    if (t * ff.divisor_images[j] != vf.divisor_images[j]) {
      throw ContractViolation("convention_transform: transform does not map one convention to the other");
    }
  }
  return t;
}

DependencyWitness dependency_witness(const PartitionSpec& spec,
                                     const DependencyConfiguration& configuration) {
  require_supported(spec);
  const Graph g = build_complete_multipartite(spec);
  auto require_edges = [&](const std::vector<Edge>& edges) {
    for (const Edge& e : edges) {
      if (e.a < 1 || e.b > static_cast<int>(g.vertex_count()) || !g.has_edge(e)) {
        throw InvalidArgument("dependency_witness: edge not in the graph");
      }
    }
  };
  require_edges(configuration.first_cycle);
  require_edges(configuration.second_cycle);
  require_edges(configuration.path);

  DependencyWitness out;
  auto append = [&](const std::vector<Edge>& edges, const Integer& scale) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      out.edges.push_back(edges[i]);
      out.coefficients.push_back(scale * alternating(i + 1));
    }
  };

  switch (configuration.kind) {
    case DependencyKind::EvenCycle: {
      if (!configuration.second_cycle.empty() || !configuration.path.empty()) {
        throw InvalidArgument("dependency_witness: an even cycle takes no second cycle or path");
      }
      validate_cycle(configuration.first_cycle, false, "cycle");
      append(configuration.first_cycle, 1);
      break;
    }
    case DependencyKind::OddCyclesSharingVertex: {
      if (!configuration.path.empty()) throw InvalidArgument("dependency_witness: unexpected path");
      const CycleData c = validate_cycle(configuration.first_cycle, true, "first cycle");
      const CycleData c2 = validate_cycle(configuration.second_cycle, true, "second cycle");
      const std::set<int> first_set(c.vertices.begin(), c.vertices.end());
      std::vector<int> shared;
      for (int v : c2.vertices) {
        if (first_set.count(v)) shared.push_back(v);
      }
      if (shared.size() != 1 || c.start != shared.front() || c2.start != shared.front()) {
        throw InvalidArgument(
            "dependency_witness: cycles must share exactly their start vertex");
      }
      append(configuration.first_cycle, 1);
      append(configuration.second_cycle, -1);
      break;
    }
    case DependencyKind::OddCyclesJoinedByPath: {
      const CycleData c = validate_cycle(configuration.first_cycle, true, "first cycle");
      const CycleData c2 = validate_cycle(configuration.second_cycle, true, "second cycle");
      const std::set<int> first_set(c.vertices.begin(), c.vertices.end());
      const std::set<int> second_set(c2.vertices.begin(), c2.vertices.end());
      for (int v : c2.vertices) {
        if (first_set.count(v)) throw InvalidArgument("dependency_witness: cycles must be disjoint");
      }
      if (configuration.path.empty()) throw InvalidArgument("dependency_witness: missing path");
      const std::vector<int> walk = walk_vertices(configuration.path, c.start, "path");
      if (walk.back() != c2.start) {
        throw InvalidArgument("dependency_witness: path must join the start vertices");
      }
      const std::set<int> distinct(walk.begin(), walk.end());
      if (distinct.size() != walk.size()) throw InvalidArgument("dependency_witness: path is not simple");
      for (std::size_t i = 1; i + 1 < walk.size(); ++i) {
        if (first_set.count(walk[i]) || second_set.count(walk[i])) {
          throw InvalidArgument("dependency_witness: path meets a cycle internally");
        }
      }
      const bool odd = configuration.path.size() % 2 == 1;
      append(configuration.first_cycle, 1);
      append(configuration.second_cycle, odd ? 1 : -1);
      append(configuration.path, -2);
      break;
    }
  }

  IntVector total(spec.vertex_count() + spec.part_count());
  for (std::size_t i = 0; i < out.edges.size(); ++i) {
    const WeightVector w = weight_unchecked(spec, out.edges[i]);
    for (std::size_t r = 0; r < total.size(); ++r) total[r] += out.coefficients[i] * w.entries[r];
  }
  for (const Integer& value : total) {
    if (value != 0) throw ContractViolation("dependency_witness: coefficients do not annihilate");
  }
  return out;
}

std::vector<Edge> cycle_from_vertices(const std::vector<int>& vertices) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    out.push_back(make_edge(vertices[i], vertices[(i + 1) % vertices.size()]));
  }
  return out;
}

std::vector<Edge> path_from_vertices(const std::vector<int>& vertices) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) out.push_back(make_edge(vertices[i], vertices[i + 1]));
  return out;
}

}  // namespace edgering
