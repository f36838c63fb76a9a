#include "edgering/json.hpp"

#include "edgering/errors.hpp"

namespace edgering {
namespace {

Json integers(const std::vector<Integer>& values) {
  Json out = Json::array();
  for (const Integer& v : values) out.push_back(to_int64(v));
  return out;
}

Json indices(const std::vector<std::size_t>& values) {
  Json out = Json::array();
  for (std::size_t v : values) out.push_back(v);
  return out;
}

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json to_json(const IntVector& v) { return integers(v); }

Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const Rational& x : v) out.push_back(to_string(x));
  return out;
}

Json to_json(const std::vector<IntVector>& rows) {
  Json out = Json::array();
  for (const IntVector& row : rows) out.push_back(to_json(row));
  return out;
}

Json to_json(const std::vector<RationalVector>& rows) {
  Json out = Json::array();
  for (const RationalVector& row : rows) out.push_back(to_json(row));
  return out;
}

Json to_json(const IntegerMatrix& m) {
  Json entries = Json::array();
  for (const Integer& v : m.entries()) entries.push_back(to_string(v));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

IntegerMatrix matrix_from_json(const Json& j) {
  return guarded("matrix_from_json", [&] {
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    std::vector<Integer> entries;
    for (const auto& v : j.at("entries")) {
      entries.push_back(v.is_string() ? parse_integer(v.get<std::string>()) : Integer(v.get<long>()));
    }
    if (entries.size() != rows * cols) throw InvalidArgument("matrix_from_json: entry count mismatch");
    return IntegerMatrix(rows, cols, std::move(entries));
  });
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(Json::array({e.a, e.b}));
  return Json{{"d", g.vertex_count()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j) {
  return guarded("graph_from_json", [&] {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.push_back(make_edge(e.at(0).get<int>(), e.at(1).get<int>()));
    return Graph(j.at("d").get<std::size_t>(), std::move(edges));
  });
}

Json to_json(const PartitionSpec& spec) { return Json{{"parts", spec.parts()}}; }

PartitionSpec partition_from_json(const Json& j) {
  return guarded("partition_from_json", [&] { return PartitionSpec(j.at("parts").get<std::vector<int>>()); });
}

Json to_json(const Poset& p) {
  Json covers = Json::array();
  for (const auto& [a, b] : p.covers()) covers.push_back(Json::array({a, b}));
  return Json{{"size", p.size()}, {"covers", std::move(covers)}};
}

Poset poset_from_json(const Json& j) {
  return guarded("poset_from_json", [&] {
    std::vector<std::pair<int, int>> relations;
    for (const auto& c : j.at("covers")) relations.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
    return Poset(j.at("size").get<std::size_t>(), relations);
  });
}

Json to_json(const VertexSubset& s) { return Json(s.members); }

Json to_json(const FacetSystem& facets) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < facets.dim; ++r) {
    for (const FacetForm& form : facets.forms) entries.push_back(to_string(form.coefficients[r]));
  }
  Json provenance = Json::array();
  for (const FacetForm& form : facets.forms) {
    if (form.provenance.kind == FacetProvenance::Kind::Vertex) {
      provenance.push_back(Json{{"vertex", form.provenance.vertex}});
    } else {
      provenance.push_back(Json{{"fundamental_set", to_json(form.provenance.set)}});
    }
  }
  return Json{{"rows", facets.dim},
              {"cols", facets.forms.size()},
              {"entries", std::move(entries)},
              {"provenance", std::move(provenance)}};
}

Json to_json(const TauSystem& tau) { return Json{{"dim", tau.dim}, {"forms", to_json(tau.forms)}}; }

Json to_json(const GorensteinResult& result) {
  Json out{{"gorenstein", result.gorenstein}};
  out["witness"] = result.witness ? to_json(*result.witness) : Json(nullptr);
  return out;
}

Json to_json(const ClassGroupStructure& group) {
  return Json{{"free_rank", group.free_rank},
              {"torsion", integers(group.torsion)},
              {"beta", to_json(group.divisor_images)},
              {"convention", to_string(group.convention)},
              {"basis_divisors", indices(group.basis_divisors)}};
}

Json to_json(const GroupInvariants& invariants) {
  return Json{{"free_rank", invariants.free_rank},
              {"torsion", integers(invariants.torsion)},
              {"relation_rank", invariants.relation_rank},
              {"snf_diagonals", integers(invariants.diagonals)}};
}

Json to_json(const ConicRegion& region) {
  Json rows = Json::array();
  for (const RegionInequality& row : region.inequalities) {
    rows.push_back(Json{{"family", to_string(row.family)},
                        {"coefficients", to_json(row.coefficients)},
                        {"lower", to_int64(row.lower)},
                        {"upper", to_int64(row.upper)}});
  }
  return Json{{"n", region.n}, {"certified", region.certified}, {"inequalities", std::move(rows)}};
}

Json to_json(const BoundingBox& box) {
  return Json{{"lower", to_json(box.lower)}, {"upper", to_json(box.upper)}};
}

Json to_json(const EquivalenceReport& report) {
  Json mismatches = Json::array();
  for (const EquivalenceMismatch& m : report.mismatches) {
    mismatches.push_back(
        Json{{"point", to_json(m.point)}, {"feasible", m.feasible}, {"in_region", m.in_region}});
  }
  return Json{{"passed", report.passed()},
              {"box", to_json(report.box)},
              {"points_checked", report.points_checked},
              {"feasible_count", report.feasible_count},
              {"region_count", report.region_count},
              {"mismatches", std::move(mismatches)}};
}

Json to_json(const HibiReductionReport& report) {
  Json pairs = Json::array();
  for (const HibiPair& pair : report.bijection) {
    pairs.push_back(Json{{"edge", Json::array({pair.edge.a, pair.edge.b})}, {"image", pair.image}});
  }
  return Json{{"variant", to_string(report.variant)},
              {"m", report.m},
              {"n", report.n},
              {"passed", report.passed()},
              {"vertex_count", report.bijection.size()},
              {"antichain_count", report.antichain_count},
              {"injective", report.injective},
              {"surjective", report.surjective},
              {"images_are_antichains", report.images_are_antichains},
              {"linear_determinant", to_string(report.linear_determinant)},
              {"bijection", std::move(pairs)}};
}

Json to_json(const CharacterSet& set) { return to_json(set.members()); }

Json to_json(const BetaSystem& beta) {
  return Json{{"convention", to_string(beta.convention)}, {"beta", to_json(beta.vectors)}};
}

Json to_json(const StepCheckResult& result) {
  Json out{{"passed", result.passed},
           {"positive_indices", indices(result.positive_indices)},
           {"subsets_checked", result.subsets_checked},
           {"shifts", to_json(result.shifts)}};
  out["missing_shift"] = result.missing_shift ? to_json(*result.missing_shift) : Json(nullptr);
  return out;
}

Json to_json(const NCCRCertificate& certificate) {
  Json steps = Json::array();
  for (const CertificateStep& step : certificate.steps) {
    steps.push_back(Json{{"chi", to_json(step.chi)},
                         {"lambda", to_json(step.lambda)},
                         {"positive_indices", indices(step.positive_indices)},
                         {"verified_shift_count", step.verified_shift_count},
                         {"shifts", to_json(step.shifts)}});
  }
  return Json{{"complete", certificate.complete},
              {"step_count", certificate.steps.size()},
              {"beta", to_json(certificate.beta)},
              {"initial_L", to_json(certificate.initial_L)},
              {"final_L", to_json(certificate.final_L)},
              {"target", to_json(certificate.target)},
              {"separation", to_string(certificate.separation)},
              {"assumptions", certificate.assumptions},
              {"steps", std::move(steps)}};
}

}  // namespace edgering
