#include "splitclust/certificates.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "splitclust/critical_clique.hpp"
#include "splitclust/error.hpp"

namespace splitclust {

SetFamily::SetFamily(std::vector<VertexSet> sets) {
  for (auto& s : sets) {
    normalize(s);
    if (s.empty()) throw Error(ErrorKind::EmptySet, "families may not contain the empty set");
  }
  std::sort(sets.begin(), sets.end());
  if (auto it = std::adjacent_find(sets.begin(), sets.end()); it != sets.end()) {
    throw Error(ErrorKind::DuplicateSet, "set listed twice in family");
  }
  sets_ = std::move(sets);
}

Family SetFamily::deduplicated(std::vector<VertexSet> sets) {
  for (auto& s : sets) normalize(s);
  std::erase_if(sets, [](const VertexSet& s) { return s.empty(); });
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

std::size_t SetFamily::total_size() const {
  std::size_t w = 0;
  for (const auto& s : sets_) w += s.size();
  return w;
}

std::size_t SetFamily::valency(const VertexId& v) const {
  return static_cast<std::size_t>(std::count_if(sets_.begin(), sets_.end(), [&](const VertexSet& s) {
    return std::binary_search(s.begin(), s.end(), v);
  }));
}

VertexSet SetFamily::support() const {
  VertexSet out;
  for (const auto& s : sets_) out.insert(out.end(), s.begin(), s.end());
  return normalize(out);
}

namespace {

void check_known(const Graph& g, const SetFamily& f) {
  for (const auto& s : f.sets()) {
    for (const auto& v : s) g.index_of(v);
  }
}

std::vector<std::vector<std::size_t>> indexed_sets(const Graph& g, const SetFamily& f) {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(f.size());
  for (const auto& s : f.sets()) {
    std::vector<std::size_t> idx;
    idx.reserve(s.size());
    for (const auto& v : s) idx.push_back(g.index_of(v));
    out.push_back(std::move(idx));
  }
  return out;
}

// together[i][j]: i and j share some set.
std::vector<std::vector<bool>> together_matrix(const Graph& g,
                                               const std::vector<std::vector<std::size_t>>& sets) {
  std::vector<std::vector<bool>> t(g.order(), std::vector<bool>(g.order(), false));
  for (const auto& s : sets) {
    for (std::size_t a = 0; a < s.size(); ++a) {
      for (std::size_t b = a + 1; b < s.size(); ++b) {
        t[s[a]][s[b]] = true;
        t[s[b]][s[a]] = true;
      }
    }
  }
  return t;
}

std::string first_non_clique(const Graph& g, const SetFamily& f) {
  for (const auto& s : f.sets()) {
    if (!is_clique(g, s)) {
      std::string out = "{";
      for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + s[i].str();
      return out + "}";
    }
  }
  return {};
}

}  // namespace

VerifyReport verify_sigma_cover(const Graph& g, const SigmaCliqueCover& c, Budget budget) {
  check_known(g, c);
  VerifyReport r;
  const auto weight = c.weight();
  r.metrics["weight"] = static_cast<std::int64_t>(weight);
  r.metrics["sets"] = static_cast<std::int64_t>(c.size());
  r.metrics["budget"] = static_cast<std::int64_t>(budget);
  for (const auto& v : g.vertices()) r.valency[v] = c.valency(v);

  if (auto bad = first_non_clique(g, c); !bad.empty()) {
    r.reason = "set " + bad + " is not a clique";
    return r;
  }
  const auto together = together_matrix(g, indexed_sets(g, c));
  for (auto [i, j] : g.index_edges()) {
    if (!together[i][j]) {
      r.reason = "edge " + g.vertex(i).str() + " " + g.vertex(j).str() + " is not covered";
      return r;
    }
  }
  // Every set holding v lies inside N[v]; implied by the clique check.
  for (const auto& s : c.sets()) {
    for (const auto& v : s) {
      auto closed = g.closed_neighbors(v);
      if (!std::includes(closed.begin(), closed.end(), s.begin(), s.end())) {
        throw std::logic_error("clique set escapes the closed neighborhood of a member");
      }
    }
  }
  if (weight > budget) {
    r.reason = "weight " + std::to_string(weight) + " exceeds budget " + std::to_string(budget);
    return r;
  }
  r.valid = true;
  return r;
}

VerifyReport verify_node_cover(const Graph& g, const NodeCliqueCover& c, Budget budget) {
  check_known(g, c);
  VerifyReport r;
  r.metrics["size"] = static_cast<std::int64_t>(c.size());
  r.metrics["budget"] = static_cast<std::int64_t>(budget);
  if (auto bad = first_non_clique(g, c); !bad.empty()) {
    r.reason = "set " + bad + " is not a clique";
    return r;
  }
  const auto support = c.support();
  for (const auto& v : g.vertices()) {
    if (!std::binary_search(support.begin(), support.end(), v)) {
      r.reason = "vertex " + v.str() + " is not covered";
      return r;
    }
  }
  if (c.size() > budget) {
    r.reason = "size " + std::to_string(c.size()) + " exceeds budget " + std::to_string(budget);
    return r;
  }
  r.valid = true;
  return r;
}

CostBreakdown cover_cost(const Graph& g, const Cover& c) {
  check_known(g, c);
  if (c.support().size() != g.order()) {
    throw Error(ErrorKind::NotACover, "some vertex lies in no set");
  }
  const auto sets = indexed_sets(g, c);
  const auto together = together_matrix(g, sets);
  CostBreakdown cost;
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t j = i + 1; j < g.order(); ++j) {
      if (g.adjacent(i, j) && !together[i][j]) ++cost.edges_outside;
      if (!g.adjacent(i, j) && together[i][j]) ++cost.nonedges_inside;
    }
  }
  cost.overlap_excess = c.total_size() - g.order();
  return cost;
}

VerifyReport verify_cover(const Graph& g, const Cover& c, Budget budget) {
  check_known(g, c);
  VerifyReport r;
  r.metrics["budget"] = static_cast<std::int64_t>(budget);
  if (c.support().size() != g.order()) {
    r.reason = "some vertex lies in no set";
    return r;
  }
  const auto cost = cover_cost(g, c);
  r.metrics["total"] = static_cast<std::int64_t>(cost.total());
  r.metrics["nonedges_inside"] = static_cast<std::int64_t>(cost.nonedges_inside);
  r.metrics["edges_outside"] = static_cast<std::int64_t>(cost.edges_outside);
  r.metrics["overlap_excess"] = static_cast<std::int64_t>(cost.overlap_excess);
  if (cost.total() > budget) {
    r.reason = "cost " + std::to_string(cost.total()) + " exceeds budget " + std::to_string(budget);
    return r;
  }
  r.valid = true;
  return r;
}

bool cover_respects_critical_cliques(const Graph& g, const Cover& c) {
  check_known(g, c);
  if (c.support().size() != g.order()) {
    throw Error(ErrorKind::NotACover, "some vertex lies in no set");
  }
  const auto cc = critical_clique_graph(g);
  for (const auto& s : c.sets()) {
    for (const auto& k : cc.classes) {
      std::size_t inside = 0;
      for (const auto& v : k) inside += std::binary_search(s.begin(), s.end(), v) ? 1 : 0;
      if (inside != 0 && inside != k.size()) return false;
    }
  }
  return true;
}

ModificationSequence as_modifications(const SplitSequence& splits) {
  ModificationSequence m;
  for (const auto& s : splits) m.steps.emplace_back(VertexSplit{s});
  return m;
}

Graph apply_modification(const Graph& g, const Modification& step, std::size_t index) {
  auto inapplicable = [&](const std::string& why) {
    return Error(ErrorKind::InapplicableStep, "step " + std::to_string(index) + ": " + why, index);
  };
  try {
    if (const auto* a = std::get_if<EdgeAdd>(&step)) {
      if (a->u == a->v) throw inapplicable("cannot add a self-loop");
      if (g.adjacent(a->u, a->v)) throw inapplicable("edge " + a->u.str() + " " + a->v.str() + " already present");
      return add_edge(g, a->u, a->v);
    }
    if (const auto* d = std::get_if<EdgeDelete>(&step)) {
      if (d->u == d->v || !g.adjacent(d->u, d->v)) {
        throw inapplicable("edge " + d->u.str() + " " + d->v.str() + " not present");
      }
      return delete_edge(g, d->u, d->v);
    }
    return apply_split(g, std::get<VertexSplit>(step).split);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InapplicableStep) throw;
    throw inapplicable(e.what());
  }
}

Graph apply_modifications(Graph g, const ModificationSequence& m) {
  for (std::size_t i = 0; i < m.steps.size(); ++i) g = apply_modification(g, m.steps[i], i);
  return g;
}

bool is_normalized(const ModificationSequence& m) {
  std::size_t phase = 0;
  for (const auto& s : m.steps) {
    const auto p = s.index();  // EdgeAdd=0, EdgeDelete=1, VertexSplit=2
    if (p < phase) return false;
    phase = p;
  }
  return true;
}

VerifyReport verify_modification_sequence(const Graph& g, const ModificationSequence& m,
                                          Budget budget, Problem problem) {
  VerifyReport r;
  std::size_t adds = 0, deletes = 0, splits = 0;
  for (const auto& s : m.steps) {
    adds += std::holds_alternative<EdgeAdd>(s);
    deletes += std::holds_alternative<EdgeDelete>(s);
    splits += std::holds_alternative<VertexSplit>(s);
  }
  r.metrics["length"] = static_cast<std::int64_t>(m.length());
  r.metrics["additions"] = static_cast<std::int64_t>(adds);
  r.metrics["deletions"] = static_cast<std::int64_t>(deletes);
  r.metrics["splits"] = static_cast<std::int64_t>(splits);
  r.metrics["budget"] = static_cast<std::int64_t>(budget);

  auto final_graph = apply_modifications(g, m);
  const bool cluster = is_cluster_graph(final_graph);
  r.final_graph = std::move(final_graph);
  if (problem != Problem::CVS && problem != Problem::CEVS) {
    r.reason = "modification sequences certify cvs or cevs only";
  } else if (problem == Problem::CVS && splits != m.length()) {
    r.reason = "cvs certificates may only contain vertex splits";
  } else if (!cluster) {
    r.reason = "result is not a cluster graph";
  } else if (m.length() > budget) {
    r.reason = "length " + std::to_string(m.length()) + " exceeds budget " + std::to_string(budget);
  } else {
    r.valid = true;
  }
  return r;
}

bool modification_disjoint(const P3& a, const P3& b) {
  const std::set<VertexId> sa{a.x, a.center, a.z};
  std::size_t shared = 0;
  for (const auto* v : {&b.x, &b.center, &b.z}) shared += sa.count(*v);
  return shared <= 1 && a.center != b.center;
}

VerifyReport verify_p3_packing(const Graph& g, const P3Packing& p) {
  VerifyReport r;
  r.metrics["size"] = static_cast<std::int64_t>(p.size());
  for (const auto& t : p.triples) {
    const auto x = g.index_of(t.x);
    const auto y = g.index_of(t.center);
    const auto z = g.index_of(t.z);
    if (x == z || x == y || y == z || !g.adjacent(x, y) || !g.adjacent(y, z) || g.adjacent(x, z)) {
      r.reason = t.x.str() + t.center.str() + t.z.str() + " is not an induced P3 centered at " +
                 t.center.str();
      return r;
    }
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (!modification_disjoint(p.triples[i], p.triples[j])) {
        r.reason = "triples " + std::to_string(i) + " and " + std::to_string(j) +
                   " are not modification-disjoint";
        return r;
      }
    }
  }
  r.metrics["lower_bound"] = static_cast<std::int64_t>(p.size());
  r.valid = true;
  return r;
}

}  // namespace splitclust
