#include <algorithm>
#include <set>

#include "splitclust/error.hpp"
#include "splitclust/reductions.hpp"
#include "splitclust/solvers.hpp"

namespace splitclust {

ModificationSequence cover_to_modifications(const Graph& g, const Cover& c) {
  const auto cost = cover_cost(g, c);  // NotACover, UnknownVertex

  std::set<std::pair<VertexId, VertexId>> together;
  for (const auto& s : c.sets()) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) together.emplace(s[i], s[j]);
    }
  }
  ModificationSequence m;
  Graph h = g;
  for (const auto& [u, v] : together) {
    if (!g.adjacent(u, v)) {
      m.steps.emplace_back(EdgeAdd{u, v});
      h = add_edge(h, u, v);
    }
  }
  for (const auto& e : g.edges()) {
    if (!together.count({e.u, e.v})) {
      m.steps.emplace_back(EdgeDelete{e.u, e.v});
      h = delete_edge(h, e.u, e.v);
    }
  }

  // A singleton {v} next to a larger set through v is paid as overlap; it
  // becomes a split that detaches an empty copy.
  std::vector<VertexSet> sets;
  std::set<VertexId> in_large;
  for (const auto& s : c.sets()) {
    if (s.size() >= 2) {
      sets.push_back(s);
      in_large.insert(s.begin(), s.end());
    }
  }
  for (const auto& s : c.sets()) {
    if (s.size() != 1 || !in_large.count(s[0])) continue;
    const auto& v = s[0];
    Split detach{v, h.neighbors(v), {}};
    h = apply_split(h, detach);
    m.steps.emplace_back(VertexSplit{detach});
    for (auto& t : sets) {
      std::replace(t.begin(), t.end(), v, v.child(0));
      normalize(t);
    }
  }

  const auto rest = remove_isolated(h).graph;
  for (auto& s : cover_to_splits(rest, SigmaCliqueCover(std::move(sets)))) m.steps.emplace_back(VertexSplit{std::move(s)});
  if (m.length() != cost.total()) throw std::logic_error("edit script length differs from the cover cost");
  return m;
}

Cover modifications_to_cover(const Graph& g, const ModificationSequence& m) {
  if (!is_normalized(m)) {
    throw Error(ErrorKind::NotNormalized, "expected additions, then deletions, then splits");
  }
  Graph h = g;
  SplitSequence splits;
  for (std::size_t i = 0; i < m.steps.size(); ++i) {
    if (const auto* s = std::get_if<VertexSplit>(&m.steps[i])) {
      splits.push_back(s->split);
    } else {
      h = apply_modification(h, m.steps[i], i);
    }
  }
  {
    Graph f = h;
    for (std::size_t i = 0; i < splits.size(); ++i) {
      f = apply_modification(f, VertexSplit{splits[i]}, m.steps.size() - splits.size() + i);
    }
  }
  auto sets = splits_to_cover(h, splits).sets();
  std::set<VertexId> covered;
  for (const auto& s : sets) covered.insert(s.begin(), s.end());
  for (const auto& v : g.vertices()) {
    if (!covered.count(v)) sets.push_back(VertexSet{v});
  }
  return Cover(std::move(sets));
}

}  // namespace splitclust
