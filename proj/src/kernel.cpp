#include "splitclust/kernel.hpp"

#include <stdexcept>

#include "splitclust/critical_clique.hpp"
#include "splitclust/error.hpp"

namespace splitclust {

namespace {

bool eligible(const CriticalCliqueGraph& cc, std::size_t cls) {
  return cc.classes[cls].size() >= 2 && cc.reducible[cls];
}

void require_isolate_free(const Graph& g) {
  if (auto iso = isolated_vertices(g); !iso.empty()) {
    throw Error(ErrorKind::IsolatedVertexPresent, "vertex '" + iso.front().str() + "' is isolated");
  }
}

struct RuleIResult {
  Graph graph;
  VertexSet cascaded;
};

RuleIResult rule1_step(const Graph& g, const VertexId& v) {
  auto dropped = remove_isolated(remove_vertices(g, VertexSet{v}));
  return {std::move(dropped.graph), std::move(dropped.removed)};
}

const char* kind_name(KernelStep::Kind k) {
  switch (k) {
    case KernelStep::Kind::IsolateRemoval: return "isolates";
    case KernelStep::Kind::RuleI: return "rule1";
    case KernelStep::Kind::RuleII: return "rule2";
  }
  return "?";
}

}  // namespace

std::optional<VertexId> rule1_applicable(const Graph& g) {
  require_isolate_free(g);
  const auto cc = critical_clique_graph(g);
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (eligible(cc, cc.class_of[i])) return g.vertex(i);
  }
  return std::nullopt;
}

Graph apply_rule1(const Graph& g, const VertexId& v) {
  const auto i = g.index_of(v);
  const auto cc = critical_clique_graph(g);
  if (g.degree(i) == 0 || !eligible(cc, cc.class_of[i])) {
    throw Error(ErrorKind::NotApplicable, "Rule I does not apply to '" + v.str() + "'");
  }
  return rule1_step(g, v).graph;
}

Graph canonical_negative_graph() { return Graph::indexed(3, {{0, 1}, {1, 2}}); }

std::pair<Instance, KernelTrace> kernelize(const Instance& inst) {
  expect_problem(inst, Problem::CVS);
  KernelTrace t;
  t.input = inst;
  auto first = remove_isolated(inst.graph);
  Graph g = std::move(first.graph);
  if (first.count() > 0) t.steps.push_back({KernelStep::Kind::IsolateRemoval, std::nullopt, first.removed});

  while (auto v = rule1_applicable(g)) {
    auto r = rule1_step(g, *v);
    t.steps.push_back({KernelStep::Kind::RuleI, *v, r.cascaded});
    g = std::move(r.graph);
  }

  Instance out{Problem::CVS, std::move(g), inst.budget};
  if (out.graph.order() > 3 * inst.budget) {
    t.steps.push_back({KernelStep::Kind::RuleII, std::nullopt, {}});
    out = Instance{Problem::CVS, canonical_negative_graph(), 0};
  }
  t.output = out;
  return {std::move(out), std::move(t)};
}

Instance replay(const KernelTrace& t) {
  auto fail = [](const std::string& m) { return Error(ErrorKind::InvalidCertificate, m); };
  expect_problem(t.input, Problem::CVS);
  Instance cur = t.input;
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const auto& s = t.steps[i];
    switch (s.kind) {
      case KernelStep::Kind::IsolateRemoval: {
        auto r = remove_isolated(cur.graph);
        if (r.removed != s.vertices) throw fail("isolate removal mismatch at step " + std::to_string(i));
        cur.graph = std::move(r.graph);
        break;
      }
      case KernelStep::Kind::RuleI: {
        if (!s.removed) throw fail("Rule I step without a vertex");
        apply_rule1(cur.graph, *s.removed);
        auto r = rule1_step(cur.graph, *s.removed);
        if (r.cascaded != s.vertices) throw fail("cascade mismatch at step " + std::to_string(i));
        cur.graph = std::move(r.graph);
        break;
      }
      case KernelStep::Kind::RuleII:
        if (i + 1 != t.steps.size()) throw fail("Rule II must be the last step");
        if (cur.graph.order() <= 3 * cur.budget) throw fail("Rule II fired with |V| <= 3k");
        cur = Instance{Problem::CVS, canonical_negative_graph(), 0};
        break;
    }
  }
  if (!(cur == t.output)) throw fail("replayed instance differs from the recorded output");
  return cur;
}

Json to_json(const KernelTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    Json j;
    j["rule"] = kind_name(s.kind);
    if (s.removed) j["removed"] = s.removed->str();
    if (s.kind != KernelStep::Kind::RuleII) j["isolates"] = to_json(s.vertices);
    steps.push_back(std::move(j));
  }
  Json out;
  out["negative"] = t.proven_negative();
  out["steps"] = std::move(steps);
  out["input"] = to_json(t.input);
  out["output"] = to_json(t.output);
  return out;
}

KernelTrace kernel_trace_from_json(const Json& j) {
  auto bad = [](const std::string& m) { return Error(ErrorKind::InvalidCertificate, m); };
  if (!j.is_object() || !j.contains("steps") || !j.contains("input") || !j.contains("output")) {
    throw bad("kernel trace needs steps, input and output");
  }
  KernelTrace t;
  t.input = instance_from_json(j["input"]);
  t.output = instance_from_json(j["output"]);
  if (!j["steps"].is_array()) throw bad("'steps' must be an array");
  for (const auto& s : j["steps"]) {
    KernelStep step;
    const auto rule = s.value("rule", std::string());
    if (rule == "isolates") {
      step.kind = KernelStep::Kind::IsolateRemoval;
    } else if (rule == "rule1") {
      step.kind = KernelStep::Kind::RuleI;
      if (!s.contains("removed")) throw bad("rule1 step without 'removed'");
      step.removed = vertex_from_json(s["removed"]);
    } else if (rule == "rule2") {
      step.kind = KernelStep::Kind::RuleII;
    } else {
      throw bad("unknown kernel rule '" + rule + "'");
    }
    if (s.contains("isolates")) step.vertices = vertex_set_from_json(s["isolates"]);
    t.steps.push_back(std::move(step));
  }
  return t;
}

}  // namespace splitclust
