#include "splitclust/json.hpp"

#include "splitclust/error.hpp"

namespace splitclust {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorKind::InvalidCertificate, msg); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json to_json(const VertexSet& s) {
  Json out = Json::array();
  for (const auto& v : s) out.push_back(v.str());
  return out;
}

Json to_json(const Family& f) {
  Json out = Json::array();
  for (const auto& s : f) out.push_back(to_json(s));
  return out;
}

Json to_json(const Split& s) {
  Json out;
  out["op"] = "split";
  out["target"] = s.target.str();
  out["a"] = to_json(s.neighbors_a);
  out["b"] = to_json(s.neighbors_b);
  return out;
}

Json to_json(const Modification& m) {
  if (const auto* a = std::get_if<EdgeAdd>(&m)) {
    return Json{{"op", "add"}, {"u", a->u.str()}, {"v", a->v.str()}};
  }
  if (const auto* d = std::get_if<EdgeDelete>(&m)) {
    return Json{{"op", "delete"}, {"u", d->u.str()}, {"v", d->v.str()}};
  }
  return to_json(std::get<VertexSplit>(m).split);
}

Json to_json(const ModificationSequence& m) {
  Json out = Json::array();
  for (const auto& s : m.steps) out.push_back(to_json(s));
  return out;
}

Json to_json(const P3Packing& p) {
  Json out = Json::array();
  for (const auto& t : p.triples) out.push_back(Json{t.x.str(), t.center.str(), t.z.str()});
  return out;
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(Json{e.u.str(), e.v.str()});
  Json out;
  out["vertices"] = to_json(g.vertices());
  out["edges"] = std::move(edges);
  return out;
}

Json to_json(const Instance& inst) {
  Json out;
  out["problem"] = std::string(to_string(inst.problem));
  out["budget"] = inst.budget;
  out["graph"] = to_json(inst.graph);
  return out;
}

VertexId vertex_from_json(const Json& j) {
  if (!j.is_string()) bad("vertex ids must be strings");
  return VertexId::parse(j.get<std::string>());
}

VertexSet vertex_set_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an array of vertex ids");
  VertexSet out;
  for (const auto& v : j) out.push_back(vertex_from_json(v));
  return out;
}

Family family_from_json(const Json& j) {
  if (!j.is_array()) bad("cover payload must be an array of sets");
  Family out;
  for (const auto& s : j) out.push_back(vertex_set_from_json(s));
  try {
    return SetFamily(std::move(out)).sets();
  } catch (const Error& e) {
    bad(e.what());
  }
}

Modification modification_from_json(const Json& j) {
  const auto& op = field(j, "op");
  if (!op.is_string()) bad("'op' must be a string");
  const auto name = op.get<std::string>();
  if (name == "add") return EdgeAdd{vertex_from_json(field(j, "u")), vertex_from_json(field(j, "v"))};
  if (name == "delete") return EdgeDelete{vertex_from_json(field(j, "u")), vertex_from_json(field(j, "v"))};
  if (name == "split") {
    return VertexSplit{Split{vertex_from_json(field(j, "target")),
                             normalized(vertex_set_from_json(field(j, "a"))),
                             normalized(vertex_set_from_json(field(j, "b")))}};
  }
  bad("unknown op '" + name + "'");
}

ModificationSequence sequence_from_json(const Json& j) {
  if (!j.is_array()) bad("sequence payload must be an array of steps");
  ModificationSequence out;
  for (const auto& s : j) out.steps.push_back(modification_from_json(s));
  return out;
}

P3Packing packing_from_json(const Json& j) {
  if (!j.is_array()) bad("packing payload must be an array of triples");
  P3Packing out;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) bad("packing entries are [x, center, z]");
    P3 p{vertex_from_json(t[0]), vertex_from_json(t[1]), vertex_from_json(t[2])};
    if (p.z < p.x) std::swap(p.x, p.z);
    out.triples.push_back(std::move(p));
  }
  return out;
}

Graph graph_from_json(const Json& j) {
  auto vertices = vertex_set_from_json(field(j, "vertices"));
  const auto& es = field(j, "edges");
  if (!es.is_array()) bad("'edges' must be an array");
  std::vector<Edge> edges;
  for (const auto& e : es) {
    if (!e.is_array() || e.size() != 2) bad("edges are [u, v] pairs");
    edges.push_back(Edge{vertex_from_json(e[0]), vertex_from_json(e[1])});
  }
  return Graph(std::move(vertices), edges);
}

Instance instance_from_json(const Json& j) {
  const auto& p = field(j, "problem");
  auto problem = p.is_string() ? parse_problem(p.get<std::string>()) : std::nullopt;
  if (!problem) bad("unknown problem");
  const auto& b = field(j, "budget");
  if (!b.is_number_unsigned()) bad("'budget' must be a non-negative integer");
  return Instance{*problem, graph_from_json(field(j, "graph")), b.get<Budget>()};
}

}  // namespace splitclust
