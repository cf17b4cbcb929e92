#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "splitclust/graph.hpp"
#include "splitclust/instance.hpp"
#include "splitclust/json.hpp"

namespace splitclust {

struct KernelStep {
  enum class Kind { IsolateRemoval, RuleI, RuleII };
  Kind kind = Kind::IsolateRemoval;
  std::optional<VertexId> removed;  // RuleI only
  VertexSet vertices;               // isolates dropped by this step
  friend bool operator==(const KernelStep&, const KernelStep&) = default;
};

struct KernelTrace {
  Instance input;
  Instance output;
  std::vector<KernelStep> steps;
  /// Rule II fired: the input is a NO instance.
  bool proven_negative() const { return !steps.empty() && steps.back().kind == KernelStep::Kind::RuleII; }
};

/// Smallest v with |[v]| >= 2 whose class has a clique quotient
/// neighborhood. Throws IsolatedVertexPresent.
std::optional<VertexId> rule1_applicable(const Graph& g);

/// G - v, then minus the vertices that became isolated. Throws NotApplicable
/// when v is not Rule-I eligible.
Graph apply_rule1(const Graph& g, const VertexId& v);

/// The canonical NO instance emitted by Rule II: the path 0-1-2.
Graph canonical_negative_graph();

/// Isolate removal, exhaustive Rule I, then Rule II when |V| > 3k.
std::pair<Instance, KernelTrace> kernelize(const Instance& inst);

/// Replays the steps on trace.input; throws InvalidCertificate on mismatch.
Instance replay(const KernelTrace& t);

Json to_json(const KernelTrace& t);
KernelTrace kernel_trace_from_json(const Json& j);

}  // namespace splitclust
