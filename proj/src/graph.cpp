#include "splitclust/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "splitclust/error.hpp"

namespace splitclust {

Edge make_edge(VertexId a, VertexId b) {
  if (b < a) std::swap(a, b);
  return Edge{std::move(a), std::move(b)};
}

Graph::Graph(VertexSet vertices, const std::vector<Edge>& edges) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (auto it = std::adjacent_find(vertices_.begin(), vertices_.end()); it != vertices_.end()) {
    throw Error(ErrorKind::DuplicateVertex, "vertex '" + it->str() + "' declared twice");
  }
  rows_.assign(vertices_.size(), Bitset(vertices_.size()));
  for (const auto& e : edges) {
    const auto i = index_of(e.u);
    const auto j = index_of(e.v);
    if (i == j) throw Error(ErrorKind::SelfLoop, "self-loop at '" + e.u.str() + "'");
    if (rows_[i].test(j)) {
      throw Error(ErrorKind::DuplicateEdge, "edge " + e.u.str() + " " + e.v.str() + " listed twice");
    }
    rows_[i].set(j);
    rows_[j].set(i);
    ++edge_count_;
  }
}

Graph Graph::indexed(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  VertexSet vs;
  vs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) vs.push_back(VertexId::number(i));
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (auto [a, b] : edges) es.push_back(make_edge(vs.at(a), vs.at(b)));
  return Graph(std::move(vs), es);
}

std::optional<std::size_t> Graph::find(const VertexId& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Graph::index_of(const VertexId& v) const {
  if (auto i = find(v)) return *i;
  throw Error(ErrorKind::UnknownVertex, "no vertex '" + v.str() + "'");
}

bool Graph::adjacent(const VertexId& u, const VertexId& v) const {
  return adjacent(index_of(u), index_of(v));
}

VertexSet Graph::neighbors(const VertexId& v) const {
  const auto& r = rows_[index_of(v)];
  VertexSet out;
  for (auto j = r.find_first(); j != Bitset::npos; j = r.find_next(j)) out.push_back(vertices_[j]);
  return out;
}

VertexSet Graph::closed_neighbors(const VertexId& v) const {
  auto out = neighbors(v);
  out.push_back(v);
  return normalize(out);
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::index_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (auto j = rows_[i].find_next(i); j != Bitset::npos; j = rows_[i].find_next(j)) {
      out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (auto [i, j] : index_edges()) out.push_back(Edge{vertices_[i], vertices_[j]});
  return out;
}

Graph add_edge(const Graph& g, const VertexId& u, const VertexId& v) {
  auto es = g.edges();
  es.push_back(make_edge(u, v));
  return Graph(g.vertices(), es);
}

Graph delete_edge(const Graph& g, const VertexId& u, const VertexId& v) {
  auto es = g.edges();
  const auto e = make_edge(u, v);
  auto it = std::find(es.begin(), es.end(), e);
  if (it == es.end()) {
    throw Error(ErrorKind::NotApplicable, "no edge " + u.str() + " " + v.str() + " to delete");
  }
  es.erase(it);
  return Graph(g.vertices(), es);
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<bool> kept(g.order(), false);
  for (const auto& v : keep) kept[g.index_of(v)] = true;
  VertexSet vs;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (kept[i]) vs.push_back(g.vertex(i));
  }
  std::vector<Edge> es;
  for (auto [i, j] : g.index_edges()) {
    if (kept[i] && kept[j]) es.push_back(Edge{g.vertex(i), g.vertex(j)});
  }
  return Graph(std::move(vs), es);
}

Graph remove_vertices(const Graph& g, const VertexSet& drop) {
  std::vector<bool> dropped(g.order(), false);
  for (const auto& v : drop) dropped[g.index_of(v)] = true;
  VertexSet keep;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (!dropped[i]) keep.push_back(g.vertex(i));
  }
  return induced_subgraph(g, keep);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  VertexSet vs = a.vertices();
  vs.insert(vs.end(), b.vertices().begin(), b.vertices().end());
  auto es = a.edges();
  auto eb = b.edges();
  es.insert(es.end(), eb.begin(), eb.end());
  return Graph(std::move(vs), es);
}

Graph apply_split(const Graph& g, const Split& s) {
  const auto t = g.index_of(s.target);
  const auto nbrs = g.neighbors(s.target);
  const std::set<VertexId> nset(nbrs.begin(), nbrs.end());
  std::set<VertexId> covered;
  for (const auto* side : {&s.neighbors_a, &s.neighbors_b}) {
    for (const auto& v : *side) {
      if (!g.contains(v)) throw Error(ErrorKind::UnknownVertex, "no vertex '" + v.str() + "'");
      if (!nset.count(v)) {
        throw Error(ErrorKind::ForeignNeighbor,
                    "'" + v.str() + "' is not a neighbor of '" + s.target.str() + "'");
      }
      covered.insert(v);
    }
  }
  if (covered.size() != nset.size()) {
    throw Error(ErrorKind::NeighborhoodNotCovered,
                "split of '" + s.target.str() + "' drops some of its edges");
  }
  const auto a = s.target.child(0);
  const auto b = s.target.child(1);
  for (const auto& c : {a, b}) {
    if (g.contains(c)) throw Error(ErrorKind::DuplicateVertex, "copy '" + c.str() + "' already exists");
  }

  VertexSet vs;
  vs.reserve(g.order() + 1);
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (i != t) vs.push_back(g.vertex(i));
  }
  vs.push_back(a);
  vs.push_back(b);
  std::vector<Edge> es;
  for (auto [i, j] : g.index_edges()) {
    if (i != t && j != t) es.push_back(Edge{g.vertex(i), g.vertex(j)});
  }
  for (const auto& v : s.neighbors_a) es.push_back(make_edge(a, v));
  for (const auto& v : s.neighbors_b) es.push_back(make_edge(b, v));
  // A neighbor listed twice on one side would surface as DuplicateEdge.
  return Graph(std::move(vs), es);
}

Graph apply_splits(Graph g, const SplitSequence& seq) {
  for (const auto& s : seq) g = apply_split(g, s);
  return g;
}

Graph contract(const Graph& g, const VertexId& a, const VertexId& b, const VertexId& merged) {
  const auto ia = g.index_of(a);
  const auto ib = g.index_of(b);
  if (g.adjacent(ia, ib)) {
    throw Error(ErrorKind::NotApplicable, "cannot contract adjacent vertices");
  }
  std::set<VertexId> nbrs;
  for (const auto* v : {&a, &b}) {
    for (auto& n : g.neighbors(*v)) nbrs.insert(n);
  }
  VertexSet vs;
  for (const auto& v : g.vertices()) {
    if (v != a && v != b) vs.push_back(v);
  }
  vs.push_back(merged);
  std::vector<Edge> es;
  for (auto [i, j] : g.index_edges()) {
    if (i != ia && i != ib && j != ia && j != ib) es.push_back(Edge{g.vertex(i), g.vertex(j)});
  }
  for (const auto& n : nbrs) es.push_back(make_edge(merged, n));
  return Graph(std::move(vs), es);
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<bool> seen(g.order(), false);
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      comp.push_back(g.vertex(v));
      const auto& r = g.row(v);
      for (auto w = r.find_first(); w != Bitset::npos; w = r.find_next(w)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    out.push_back(normalize(comp));
  }
  return out;
}

bool is_clique(const Graph& g, const VertexSet& set) {
  std::vector<std::size_t> idx;
  idx.reserve(set.size());
  for (const auto& v : set) idx.push_back(g.index_of(v));
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      if (idx[i] == idx[j] || !g.adjacent(idx[i], idx[j])) return false;
    }
  }
  return true;
}

bool is_cluster_graph(const Graph& g) {
  for (const auto& comp : connected_components(g)) {
    const auto k = comp.size();
    for (const auto& v : comp) {
      if (g.degree(g.index_of(v)) != k - 1) return false;
    }
  }
  return true;
}

bool has_induced_p3(const Graph& g) {
  for (std::size_t y = 0; y < g.order(); ++y) {
    const auto& r = g.row(y);
    for (auto x = r.find_first(); x != Bitset::npos; x = r.find_next(x)) {
      // some neighbor of y that is neither x nor adjacent to x
      Bitset rest = r;
      rest.reset(x);
      rest -= g.row(x);
      if (rest.any()) return true;
    }
  }
  return false;
}

std::vector<P3> enumerate_induced_p3(const Graph& g) {
  std::vector<P3> out;
  for (std::size_t y = 0; y < g.order(); ++y) {
    const auto& r = g.row(y);
    for (auto x = r.find_first(); x != Bitset::npos; x = r.find_next(x)) {
      for (auto z = r.find_next(x); z != Bitset::npos; z = r.find_next(z)) {
        if (!g.adjacent(x, z)) out.push_back(P3{g.vertex(x), g.vertex(y), g.vertex(z)});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet isolated_vertices(const Graph& g) {
  VertexSet out;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (g.row(i).none()) out.push_back(g.vertex(i));
  }
  return out;
}

IsolatedRemoval remove_isolated(const Graph& g) {
  auto iso = isolated_vertices(g);
  return IsolatedRemoval{remove_vertices(g, iso), std::move(iso)};
}

}  // namespace splitclust
