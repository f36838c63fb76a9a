#include "edgering_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>

#include "edgering/class_group.hpp"
#include "edgering/conic.hpp"
#include "edgering/edge_polytope.hpp"
#include "edgering/errors.hpp"
#include "edgering/fixtures.hpp"
#include "edgering/graph.hpp"
#include "edgering/json.hpp"
#include "edgering/nccr.hpp"
#include "edgering/poset.hpp"

namespace edgering::cli {
namespace {

struct Options {
  std::vector<int> parts;
  int margin = 1;
  int bound = 2;
  std::string instance;
  std::string convention = "fundamental-first";
  std::string variant = "both";
  std::string separation = "initial";
  std::string out;
};

/// A finished document plus the exit status it implies.
struct Outcome {
  Json document;
  int status = kExitSuccess;
};

Json inputs_echo(const std::string& subcommand, const Options& opt, const std::vector<std::string>& keys) {
  Json in{{"subcommand", subcommand}};
  for (const std::string& key : keys) {
    if (key == "parts") in["parts"] = opt.parts;
    if (key == "margin") in["margin"] = opt.margin;
    if (key == "bound") in["bound"] = opt.bound;
    if (key == "instance") in["instance"] = opt.instance;
    if (key == "convention") in["convention"] = opt.convention;
    if (key == "variant") in["variant"] = opt.variant;
    if (key == "separation") in["separation"] = opt.separation;
  }
  return in;
}

void merge_into(Json& doc, const Json& fields) {
  for (const auto& [key, value] : fields.items()) doc[key] = value;
}

Json subset_list(const std::vector<VertexSubset>& sets) {
  Json out = Json::array();
  for (const VertexSubset& s : sets) out.push_back(to_json(s));
  return out;
}

Outcome graph_info(const Options& opt) {
  const PartitionSpec spec(opt.parts);
  const Graph g = build_complete_multipartite(spec);
  Json doc{{"inputs", inputs_echo("graph-info", opt, {"parts"})}};
  doc["vertex_count"] = g.vertex_count();
  doc["edge_count"] = g.edges().size();
  doc["supported_family"] = spec.in_supported_family();
  doc["bipartite"] = is_bipartite(g, all_vertices(g));
  doc["odd_cycle_condition"] = satisfies_odd_cycle_condition(g);
  doc["regular_vertices"] = to_json(regular_vertices(g));
  doc["fundamental_sets"] = subset_list(fundamental_sets(g));
  doc["graph"] = to_json(g);
  return {doc};
}

Outcome facets(const Options& opt) {
  const PartitionSpec spec(opt.parts);
  const FacetSystem system = facet_system(spec);
  const EdgePolytope polytope = edge_polytope(build_complete_multipartite(spec));
  bool supporting = true;
  for (const FacetForm& form : system.forms) supporting = supporting && is_supporting(form, polytope);
  const bool irredundant = is_irredundant(system, polytope);

  Json doc{{"inputs", inputs_echo("facets", opt, {"parts"})}};
  doc["facet_count"] = system.size();
  doc["supporting"] = supporting;
  doc["irredundant"] = irredundant;
  doc["facets"] = to_json(system);
  doc["tau"] = to_json(tau_system(spec));
  return {doc, supporting && irredundant ? kExitSuccess : kExitVerificationFailure};
}

Outcome classgroup(const Options& opt) {
  const PartitionSpec spec(opt.parts);
  const ClassGroupStructure group = class_group(spec, parse_convention(opt.convention));
  Json doc{{"inputs", inputs_echo("classgroup", opt, {"parts", "convention"})}};
  merge_into(doc, to_json(group));
  doc["routes"] = Json{{"class_matrix", to_json(class_group_from_class_matrix(spec))},
                       {"tau_cokernel", to_json(class_group_from_tau(spec))}};
  return {doc};
}

Outcome conic(const Options& opt) {
  const PartitionSpec spec(opt.parts);
  const std::vector<Character> points = conic_lattice_points(spec);
  Json doc{{"inputs", inputs_echo("conic", opt, {"parts"})}};
  doc["point_count"] = points.size();
  doc["points"] = to_json(points);
  doc["vertices"] = to_json(region_vertices(spec));
  doc["bounding_box"] = to_json(bounding_box(spec));
  doc["region"] = to_json(conic_region(spec));
  return {doc};
}

Outcome conic_verify(const Options& opt) {
  if (opt.margin < 0) throw InvalidArgument("--margin must be nonnegative");
  const PartitionSpec spec(opt.parts);
  const EquivalenceReport report = verify_equivalence(spec, opt.margin);
  Json doc{{"inputs", inputs_echo("conic-verify", opt, {"parts", "margin"})}};
  merge_into(doc, to_json(report));
  return {doc, report.passed() ? kExitSuccess : kExitVerificationFailure};
}

Outcome gorenstein(const Options& opt) {
  const PartitionSpec spec(opt.parts);
  Json doc{{"inputs", inputs_echo("gorenstein", opt, {"parts"})}};
  merge_into(doc, to_json(is_gorenstein(spec)));
  return {doc};
}

Outcome hibi(const Options& opt) {
  if (opt.parts.size() != 2) throw InvalidArgument("hibi expects --parts m,n");
  const int m = opt.parts[0];
  const int n = opt.parts[1];
  std::vector<HibiVariant> variants;
  if (opt.variant == "both" || opt.variant == "bipartite") variants.push_back(HibiVariant::Bipartite);
  if (opt.variant == "both" || opt.variant == "one-singleton") variants.push_back(HibiVariant::OneSingleton);

  bool passed = true;
  Json reports = Json::array();
  for (HibiVariant variant : variants) {
    const HibiReductionReport report = verify_hibi_reduction(m, n, variant);
    passed = passed && report.passed();
    reports.push_back(to_json(report));
  }
  Json doc{{"inputs", inputs_echo("hibi", opt, {"parts", "variant"})}};
  doc["passed"] = passed;
  doc["x_shape"] = Json{{"chain_pair", contains_x_shape(chain_pair_poset(m, n, false))},
                        {"chain_pair_extra", contains_x_shape(chain_pair_poset(m, n, true))}};
  doc["reports"] = std::move(reports);
  return {doc, passed ? kExitSuccess : kExitVerificationFailure};
}

SeparationReference parse_separation(const std::string& text) {
  if (text == "initial") return SeparationReference::Initial;
  if (text == "current") return SeparationReference::Current;
  throw InvalidArgument("unknown separation reference: " + text);
}

bool beta_matches(const BetaSystem& beta, std::vector<IntVector> expected) {
  std::vector<IntVector> got = beta.vectors;
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  return got == expected;
}

/// Characters that no order of exact lambda choices can reach.
Json closure_diagnosis(const NCCRInstance& inst, const BetaSystem& beta) {
  const NCCRCertificate closure = run_exact_closure(inst.initial, inst.target, beta, inst.assumptions);
  std::vector<Character> unreachable;
  for (const Character& chi : inst.target.members()) {
    if (!closure.final_L.contains(chi)) unreachable.push_back(chi);
  }
  return Json{{"reachable_count", closure.final_L.size()},
              {"target_count", inst.target.size()},
              {"unreachable", to_json(unreachable)}};
}

Outcome nccr_replay(const Options& opt) {
  const NCCRInstance inst = load_instance(opt.instance);
  const BetaSystem beta = beta_system(inst.spec, inst.convention);
  Json doc{{"inputs", inputs_echo("nccr-replay", opt, {"instance", "separation"})}};
  doc["parts"] = inst.spec.parts();
  doc["beta_matches_fixture"] = beta_matches(beta, inst.beta_multiset);
  doc["difference_closure"] = check_difference_closure(inst.initial, inst.target);
  try {
    const NCCRCertificate cert = run_schedule(inst.initial, inst.target, beta, inst.schedule,
                                              inst.assumptions, parse_separation(opt.separation));
    const bool replayed = replay_certificate(cert);
    const bool ok = cert.complete && replayed && doc["beta_matches_fixture"].get<bool>() &&
                    doc["difference_closure"].get<bool>();
    doc["passed"] = ok;
    doc["replay_verified"] = replayed;
    doc["certificate"] = to_json(cert);
    return {doc, ok ? kExitSuccess : kExitVerificationFailure};
  } catch (const ScheduleError& e) {
    doc["passed"] = false;
    doc["failure"] = Json{{"step_index", e.step()},
                          {"chi", to_json(e.chi())},
                          {"lambda", to_json(e.lambda())},
                          {"reason", e.reason()}};
    doc["diagnosis"] = closure_diagnosis(inst, beta);
    return {doc, kExitVerificationFailure};
  }
}

Outcome nccr_search(const Options& opt) {
  const NCCRInstance inst = load_instance(opt.instance);
  const BetaSystem beta = beta_system(inst.spec, inst.convention);
  const SeparationReference separation = parse_separation(opt.separation);
  Json doc{{"inputs", inputs_echo("nccr-search", opt, {"instance", "bound", "separation"})}};
  doc["parts"] = inst.spec.parts();
  const auto cert = run_auto_search(inst.initial, inst.target, beta, opt.bound, inst.assumptions, separation);
  doc["passed"] = cert.has_value();
  if (cert) {
    doc["certificate"] = to_json(*cert);
    return {doc};
  }
  doc["diagnosis"] = closure_diagnosis(inst, beta);
  return {doc, kExitVerificationFailure};
}

void write_document(const Json& doc, const std::string& path, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InvalidArgument("cannot open output file: " + path);
  file << text;
  if (!file) throw InvalidArgument("failed writing output file: " + path);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Edge rings of complete multipartite graphs: class groups, conic classes, NCCR checks"};
  app.require_subcommand(1);
  Options opt;

  auto add_parts = [&](CLI::App* sub, const std::string& help) {
    sub->add_option("--parts", opt.parts, help)->delimiter(',')->required()->check(CLI::PositiveNumber);
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", opt.out, "Write JSON to FILE"); };
  auto add_separation = [&](CLI::App* sub) {
    sub->add_option("--separation", opt.separation, "Set lambda must separate chi from")
        ->check(CLI::IsMember({"initial", "current"}));
  };
  auto add_instance = [&](CLI::App* sub) {
    sub->add_option("--instance", opt.instance, "Bundled instance")->required()->check(CLI::IsMember(instance_names()));
  };

  std::vector<std::pair<CLI::App*, std::function<Outcome(const Options&)>>> commands;
  auto command = [&](const std::string& name, const std::string& help, std::function<Outcome(const Options&)> fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_out(sub);
    commands.emplace_back(sub, std::move(fn));
    return sub;
  };

  add_parts(command("graph-info", "Regular vertices, fundamental sets, odd cycle condition", graph_info),
            "Part sizes r1,...,rn");
  add_parts(command("facets", "Facet forms of the edge polytope and the tau forms", facets), "Part sizes r1,...,rn");
  {
    CLI::App* sub = command("classgroup", "Class group and divisor classes", classgroup);
    add_parts(sub, "Part sizes r1,...,rn");
    sub->add_option("--convention", opt.convention, "Basis of the class group")
        ->check(CLI::IsMember({"fundamental-first", "vertex-first"}));
  }
  add_parts(command("conic", "Lattice points and vertices of the conic region", conic), "Part sizes r1,...,rn");
  {
    CLI::App* sub = command("conic-verify", "Compare LP feasibility with region membership", conic_verify);
    add_parts(sub, "Part sizes r1,...,rn");
    sub->add_option("--margin", opt.margin, "Inflate the bounding box by this much")->check(CLI::NonNegativeNumber);
  }
  add_parts(command("gorenstein", "Gorenstein test on the tau system", gorenstein), "Part sizes r1,...,rn");
  {
    CLI::App* sub = command("hibi", "Edge polytope versus chain polytope bijections", hibi);
    add_parts(sub, "Chain lengths m,n");
    sub->add_option("--variant", opt.variant, "Reduction to check")
        ->check(CLI::IsMember({"bipartite", "one-singleton", "both"}));
  }
  {
    CLI::App* sub = command("nccr-replay", "Replay a bundled separation schedule", nccr_replay);
    add_instance(sub);
    add_separation(sub);
  }
  {
    CLI::App* sub = command("nccr-search", "Search lambdas instead of using the schedule", nccr_search);
    add_instance(sub);
    add_separation(sub);
    sub->add_option("--bound", opt.bound, "Max norm of lambda")->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  for (const auto& [sub, fn] : commands) {
    if (!sub->parsed()) continue;
    try {
      const Outcome outcome = fn(opt);
      write_document(outcome.document, opt.out, out);
      return outcome.status;
    } catch (const VerificationFailure& e) {
      err << "verification failure: " << e.what() << "\n";
      return kExitVerificationFailure;
    } catch (const ContractViolation& e) {
      err << "internal error: " << e.what() << "\n";
      return kExitVerificationFailure;
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    }
  }
  err << "no subcommand given\n";
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"edgering"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace edgering::cli
