#include "edgering/edge_polytope.hpp"

#include "edgering/errors.hpp"
#include "edgering/rational_linear.hpp"
#include "edgering/smith.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace edgering {
namespace {

std::string describe(const PartitionSpec& spec) {
  std::string s = "(";
  for (std::size_t i = 0; i < spec.part_count(); ++i) {
    if (i) s += ",";
    s += std::to_string(spec.part_size(i));
  }
  return s + ")";
}

FacetForm fundamental_form(const Graph& g, const std::vector<LatticePoint>& points,
                           const VertexSubset& t) {
  IntVector form(g.vertex_count());
  for (int v : neighborhood(g, t).members) form[v - 1] += 1;
  for (int v : t.members) form[v - 1] -= 1;
  FacetForm out;
  out.coefficients = normalize_on_points(form, points);
  out.provenance = {FacetProvenance::Kind::FundamentalSet, 0, t};
  return out;
}

FacetForm vertex_form(std::size_t dim, int vertex) {
  FacetForm out;
  out.coefficients.assign(dim, 0);
  out.coefficients[vertex - 1] = 1;
  out.provenance = {FacetProvenance::Kind::Vertex, vertex, {}};
  return out;
}

RationalRows as_rows(const std::vector<LatticePoint>& points) {
  RationalRows rows;
  rows.reserve(points.size());
  for (const LatticePoint& p : points) rows.emplace_back(p.begin(), p.end());
  return rows;
}

}  // namespace

EdgePolytope edge_polytope(const Graph& g) {
  EdgePolytope out;
  out.ambient_dim = g.vertex_count();
  out.edges = g.edges();
  for (const Edge& e : g.edges()) {
    LatticePoint p(g.vertex_count(), 0);
    p[e.a - 1] = 1;
    p[e.b - 1] = 1;
    out.lattice_points.push_back(std::move(p));
  }
  return out;
}

Rational FacetForm::evaluate(const LatticePoint& p) const {
  Rational s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != 0) s += coefficients[i] * p[i];
  }
  return s;
}

RationalVector normalize_on_points(const IntVector& form, const std::vector<LatticePoint>& points) {
  Integer g = 0;
  for (const LatticePoint& p : points) {
    Integer value = 0;
    for (std::size_t i = 0; i < p.size(); ++i) value += form[i] * p[i];
    g = gcd(g, value);
  }
  if (g == 0) throw InvalidArgument("normalize_on_points: form vanishes on every point");
  RationalVector out(form.size());
  for (std::size_t i = 0; i < form.size(); ++i) out[i] = Rational(form[i], g);
  return out;
}

void require_supported(const PartitionSpec& spec) {
  if (spec.in_supported_family()) return;
  throw UnsupportedSpec(
      "K" + describe(spec) +
      " is outside the class-group-Z^n family (need n = 3 with r1 >= 2, or n >= 4); "
      "its edge polytope is unimodularly equivalent to an order polytope, use the "
      "Hibi-ring reduction (edgering::verify_hibi_reduction / `edgering hibi`)");
}

FacetSystem facet_system(const PartitionSpec& spec) {
  require_supported(spec);
  const Graph g = build_complete_multipartite(spec);
  const EdgePolytope polytope = edge_polytope(g);
  FacetSystem out;
  out.dim = spec.vertex_count();
  for (int v = 1; v <= static_cast<int>(out.dim); ++v) out.forms.push_back(vertex_form(out.dim, v));
  for (std::size_t i = 0; i < spec.part_count(); ++i) {
    out.forms.push_back(
        fundamental_form(g, polytope.lattice_points, VertexSubset(spec.part_labels(i))));
  }
  return out;
}

FacetSystem graph_facet_system(const Graph& g, EnumerationLimits limits) {
  if (is_bipartite(g, all_vertices(g))) {
    throw InvalidArgument("graph_facet_system: the facet description needs a non-bipartite graph");
  }
  const EdgePolytope polytope = edge_polytope(g);
  FacetSystem out;
  out.dim = g.vertex_count();
  for (int v : regular_vertices(g).members) out.forms.push_back(vertex_form(out.dim, v));
  for (const VertexSubset& t : fundamental_sets(g, limits)) {
    out.forms.push_back(fundamental_form(g, polytope.lattice_points, t));
  }
  return out;
}

bool is_supporting(const FacetForm& form, const EdgePolytope& polytope) {
  bool touches = false;
  for (const LatticePoint& p : polytope.lattice_points) {
    const Rational v = form.evaluate(p);
    if (v < 0) return false;
    if (v == 0) touches = true;
  }
  return touches;
}

bool is_irredundant(const FacetSystem& facets, const EdgePolytope& polytope) {
  // All lattice points lie on sum x = 2, so linear rank = affine dimension + 1.
  const std::size_t polytope_rank = rational_rank(as_rows(polytope.lattice_points));
  std::set<std::vector<std::size_t>> zero_sets;
  for (const FacetForm& form : facets.forms) {
    std::vector<LatticePoint> on_face;
    std::vector<std::size_t> indices;
    for (std::size_t k = 0; k < polytope.lattice_points.size(); ++k) {
      if (form.evaluate(polytope.lattice_points[k]) == 0) {
        on_face.push_back(polytope.lattice_points[k]);
        indices.push_back(k);
      }
    }
    if (on_face.empty() || rational_rank(as_rows(on_face)) + 1 != polytope_rank) return false;
    if (!zero_sets.insert(indices).second) return false;
  }
  return true;
}

IntegerMatrix TauSystem::matrix() const { return IntegerMatrix::from_rows(forms, dim); }

TauSystem tau_system(const PartitionSpec& spec) {
  require_supported(spec);
  const std::size_t d = spec.vertex_count();
  const std::size_t n = spec.part_count();
  TauSystem out;
  out.dim = d;
  for (std::size_t i = 0; i < d; ++i) {
    IntVector unit(d);
    unit[i] = 1;
    out.forms.push_back(std::move(unit));
  }
  for (std::size_t i = 0; i < n; ++i) {
    IntVector form(d);
    for (int k = 1; k <= static_cast<int>(d); ++k) {
      if (spec.part_of(k) != n - 1) form[k - 1] += 1;
    }
    for (int l : spec.part_labels(i)) form[l - 1] -= 1;
    form[d - 1] -= 1;
    out.forms.push_back(std::move(form));
  }
  return out;
}

GorensteinResult is_gorenstein(const PartitionSpec& spec) {
  const TauSystem tau = tau_system(spec);
  const IntVector ones(tau.forms.size(), Integer(1));
  auto witness = solve_integer_system(tau.matrix(), ones);
  GorensteinResult out;
  out.gorenstein = witness.has_value();
  out.witness = std::move(witness);
  return out;
}

}  // namespace edgering
