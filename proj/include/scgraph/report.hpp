#pragma once

#include <json.hpp>

#include "scgraph/p4_partition.hpp"
#include "scgraph/structure.hpp"

namespace scgraph {

using Json = nlohmann::ordered_json;

Json to_json(VertexSet s);
/// {"A": [...], "B": [...], "C": [...], "D": [...]}
Json to_json(const SkewPartition& w);
Json to_json(const SymmetricPartition& w);
Json to_json(const Witness& w);
/// {"quads": [[w, x, y, z], ...], "leftover": v | null}
Json to_json(const P4Partition& p);
/// {"case": int, "kind": "c5|skew|symmetric", "witness": ...}
Json to_json(const TheoremMResult& r);
/// {"graph", "n", "c5", "skew", "symmetric", "conjecture_holds", "theorem_m"} in that order.
Json to_json(const StructureReport& r);

}  // namespace scgraph
