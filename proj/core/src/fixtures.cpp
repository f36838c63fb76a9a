#include "edgering/fixtures.hpp"

#include "edgering/errors.hpp"

#include <nlohmann/json.hpp>

namespace edgering {
namespace detail {
extern const std::string_view kFixtureK222;
extern const std::string_view kFixtureK4;
}  // namespace detail

namespace {

IntVector vector_of(const nlohmann::json& array) {
  IntVector out;
  for (const auto& value : array) out.emplace_back(value.get<long>());
  return out;
}

std::vector<IntVector> vectors_of(const nlohmann::json& array) {
  std::vector<IntVector> out;
  for (const auto& row : array) out.push_back(vector_of(row));
  return out;
}

}  // namespace

std::vector<std::string> instance_names() { return {"k222", "k4"}; }

NCCRInstance parse_instance(std::string_view json_text) {
  try {
    const nlohmann::json doc = nlohmann::json::parse(json_text);
    NCCRInstance out;
    out.name = doc.at("name").get<std::string>();
    out.spec = PartitionSpec(doc.at("parts").get<std::vector<int>>());
    out.convention = parse_convention(doc.at("convention").get<std::string>());
    out.initial = CharacterSet(vectors_of(doc.at("initial")), CharacterSetLabel::L);
    out.target = CharacterSet(vectors_of(doc.at("target")), CharacterSetLabel::LTilde);
    out.non_conic = vectors_of(doc.at("non_conic"));
    out.beta_multiset = vectors_of(doc.at("beta_multiset"));
    for (const auto& row : doc.at("schedule")) {
      out.schedule.push_back({vector_of(row.at("chi")), vector_of(row.at("lambda"))});
    }
    out.assumptions = doc.at("assumptions").get<std::vector<std::string>>();
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("parse_instance: ") + e.what());
  }
}

NCCRInstance load_instance(std::string_view name) {
  if (name == "k222") return parse_instance(detail::kFixtureK222);
  if (name == "k4") return parse_instance(detail::kFixtureK4);
  throw InvalidArgument("unknown instance: " + std::string(name) + " (expected k222 or k4)");
}

}  // namespace edgering
