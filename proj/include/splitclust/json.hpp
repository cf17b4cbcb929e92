#pragma once

// JSON conversions for library values, shared by certificates, traces and
// hunt reports.

#include <json.hpp>

#include "splitclust/certificates.hpp"
#include "splitclust/graph.hpp"
#include "splitclust/instance.hpp"

namespace splitclust {

using Json = nlohmann::ordered_json;

Json to_json(const VertexSet& s);
Json to_json(const Family& f);
Json to_json(const Split& s);
Json to_json(const Modification& m);
Json to_json(const ModificationSequence& m);
Json to_json(const P3Packing& p);
/// {"vertices": [...], "edges": [[u, v], ...]}
Json to_json(const Graph& g);
/// {"problem", "budget", "graph"}
Json to_json(const Instance& inst);

// Parsers throw InvalidCertificate on shape errors.
VertexId vertex_from_json(const Json& j);
VertexSet vertex_set_from_json(const Json& j);
Family family_from_json(const Json& j);
Modification modification_from_json(const Json& j);
ModificationSequence sequence_from_json(const Json& j);
P3Packing packing_from_json(const Json& j);
Graph graph_from_json(const Json& j);
Instance instance_from_json(const Json& j);

}  // namespace splitclust
