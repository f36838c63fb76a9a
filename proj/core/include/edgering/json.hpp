#pragma once

#include "edgering/class_group.hpp"
#include "edgering/conic.hpp"
#include "edgering/edge_polytope.hpp"
#include "edgering/graph.hpp"
#include "edgering/integer_matrix.hpp"
#include "edgering/nccr.hpp"
#include "edgering/poset.hpp"

#include <nlohmann/json.hpp>

namespace edgering {

/// Keys keep insertion order so that documents are byte-stable.
using Json = nlohmann::ordered_json;

/// Integers as JSON numbers; throws if a value does not fit in 64 bits.
Json to_json(const IntVector& v);
/// "p/q" or "p" strings.
Json to_json(const RationalVector& v);
Json to_json(const std::vector<IntVector>& rows);
Json to_json(const std::vector<RationalVector>& rows);

/// {"rows", "cols", "entries"} with decimal-string entries, row-major.
Json to_json(const IntegerMatrix& m);
IntegerMatrix matrix_from_json(const Json& j);

/// {"d", "edges"}
Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

/// {"parts"}
Json to_json(const PartitionSpec& spec);
PartitionSpec partition_from_json(const Json& j);

/// {"size", "covers"}
Json to_json(const Poset& p);
Poset poset_from_json(const Json& j);

Json to_json(const VertexSubset& s);

/// Forms as columns of a d x |Psi| matrix with "p/q" entries.
Json to_json(const FacetSystem& facets);
Json to_json(const TauSystem& tau);
Json to_json(const GorensteinResult& result);

/// {"free_rank", "torsion", "beta", "convention"}
Json to_json(const ClassGroupStructure& group);
Json to_json(const GroupInvariants& invariants);

Json to_json(const ConicRegion& region);
Json to_json(const BoundingBox& box);
Json to_json(const EquivalenceReport& report);

Json to_json(const HibiReductionReport& report);

Json to_json(const CharacterSet& set);
Json to_json(const BetaSystem& beta);
Json to_json(const StepCheckResult& result);
Json to_json(const NCCRCertificate& certificate);

}  // namespace edgering
