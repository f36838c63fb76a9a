#pragma once

#include "edgering/class_group.hpp"
#include "edgering/graph.hpp"
#include "edgering/nccr.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace edgering {

/// A worked NCCR instance: the starting set, the target set, the expected
/// beta multiset and a separation schedule.
struct NCCRInstance {
  std::string name;
  PartitionSpec spec{std::vector<int>{1}};
  BasisConvention convention = BasisConvention::FundamentalFirst;
  CharacterSet initial;
  CharacterSet target;
  /// Members of the target outside the conic region.
  std::vector<Character> non_conic;
  std::vector<IntVector> beta_multiset;
  std::vector<ScheduleEntry> schedule;
  std::vector<std::string> assumptions;
};

std::vector<std::string> instance_names();

/// "k222" or "k4"; throws InvalidArgument otherwise.
NCCRInstance load_instance(std::string_view name);

/// Parses an instance document with the same layout as the bundled ones.
NCCRInstance parse_instance(std::string_view json_text);

}  // namespace edgering
