#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "splitclust/graph.hpp"
#include "splitclust/instance.hpp"

namespace splitclust {

using Family = std::vector<VertexSet>;

/// Family of distinct, non-empty vertex sets in canonical order (each set
/// sorted, sets sorted lexicographically). Construction canonicalizes and
/// throws EmptySet / DuplicateSet.
class SetFamily {
 public:
  SetFamily() = default;
  explicit SetFamily(std::vector<VertexSet> sets);

  /// Like the constructor but silently drops empty sets and duplicates.
  static Family deduplicated(std::vector<VertexSet> sets);

  const Family& sets() const noexcept { return sets_; }
  std::size_t size() const noexcept { return sets_.size(); }
  bool empty() const noexcept { return sets_.empty(); }
  /// Sum of set sizes.
  std::size_t total_size() const;
  /// Number of sets containing v.
  std::size_t valency(const VertexId& v) const;
  /// Union of all sets.
  VertexSet support() const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  Family sets_;
};

/// Cliques covering every edge; weight = sum of sizes.
struct SigmaCliqueCover : SetFamily {
  using SetFamily::SetFamily;
  std::size_t weight() const { return total_size(); }
};

/// Cliques covering every vertex; measured by the number of sets.
struct NodeCliqueCover : SetFamily {
  using SetFamily::SetFamily;
};

/// Arbitrary sets covering every vertex; priced by cover_cost.
struct Cover : SetFamily {
  using SetFamily::SetFamily;
};

struct VerifyReport {
  bool valid = false;
  std::string reason;  // empty when valid
  std::map<std::string, std::int64_t> metrics;
  std::map<VertexId, std::size_t> valency;
  std::optional<Graph> final_graph;
};

// ---- sigma / node clique covers ----

/// Valid iff every set is a clique, every edge lies in some set and the
/// weight is at most `budget`. Throws UnknownVertex.
VerifyReport verify_sigma_cover(const Graph& g, const SigmaCliqueCover& c, Budget budget);

/// Valid iff every set is a clique, every vertex is covered and |c| <= budget.
VerifyReport verify_node_cover(const Graph& g, const NodeCliqueCover& c, Budget budget);

// ---- covers ----

struct CostBreakdown {
  std::size_t nonedges_inside = 0;  // vertex pairs, each counted once
  std::size_t edges_outside = 0;
  std::size_t overlap_excess = 0;   // sum |C| - |V|
  std::size_t total() const { return nonedges_inside + edges_outside + overlap_excess; }
  friend bool operator==(const CostBreakdown&, const CostBreakdown&) = default;
};

/// Throws NotACover or UnknownVertex.
CostBreakdown cover_cost(const Graph& g, const Cover& c);

/// Valid iff c covers V and cost <= budget.
VerifyReport verify_cover(const Graph& g, const Cover& c, Budget budget);

/// For every critical clique K and every set C: K within C or disjoint from it.
/// Throws NotACover.
bool cover_respects_critical_cliques(const Graph& g, const Cover& c);

// ---- modification sequences ----

struct EdgeAdd {
  VertexId u, v;
  friend bool operator==(const EdgeAdd&, const EdgeAdd&) = default;
};
struct EdgeDelete {
  VertexId u, v;
  friend bool operator==(const EdgeDelete&, const EdgeDelete&) = default;
};
struct VertexSplit {
  Split split;
  friend bool operator==(const VertexSplit&, const VertexSplit&) = default;
};

using Modification = std::variant<EdgeAdd, EdgeDelete, VertexSplit>;

struct ModificationSequence {
  std::vector<Modification> steps;
  std::size_t length() const { return steps.size(); }
  friend bool operator==(const ModificationSequence&, const ModificationSequence&) = default;
};

ModificationSequence as_modifications(const SplitSequence& splits);

/// Throws InapplicableStep (with step index) when a step cannot be applied.
Graph apply_modification(const Graph& g, const Modification& step, std::size_t index = 0);
Graph apply_modifications(Graph g, const ModificationSequence& m);

/// Adds, then deletes, then splits.
bool is_normalized(const ModificationSequence& m);

/// Applies m; valid iff the result is a cluster graph, length <= budget and,
/// for CVS, every step is a split. Throws InapplicableStep.
VerifyReport verify_modification_sequence(const Graph& g, const ModificationSequence& m,
                                          Budget budget, Problem problem);

// ---- P3 packings ----

struct P3Packing {
  std::vector<P3> triples;
  std::size_t size() const { return triples.size(); }
  friend bool operator==(const P3Packing&, const P3Packing&) = default;
};

/// Two P3s share at most one vertex and have distinct centers.
bool modification_disjoint(const P3& a, const P3& b);

/// Valid iff every triple is an induced P3 (with the given center) and the
/// triples are pairwise modification-disjoint; metrics["lower_bound"] is the
/// packing size. Throws UnknownVertex.
VerifyReport verify_p3_packing(const Graph& g, const P3Packing& p);

}  // namespace splitclust
