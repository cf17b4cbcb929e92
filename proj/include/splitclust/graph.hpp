#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "splitclust/vertex_id.hpp"

namespace splitclust {

using Bitset = boost::dynamic_bitset<>;

struct Edge {
  VertexId u;
  VertexId v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Canonical edge with u < v.
Edge make_edge(VertexId a, VertexId b);

/// Simple undirected graph. Vertices are kept sorted by VertexId, so vertex
/// index order and identifier order coincide. Values are immutable: every
/// operation below returns a new graph.
class Graph {
 public:
  Graph() = default;

  /// Throws DuplicateVertex, UnknownVertex, SelfLoop or DuplicateEdge.
  Graph(VertexSet vertices, const std::vector<Edge>& edges);

  /// Vertices named "0".."n-1"; edges given by index pairs.
  static Graph indexed(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t order() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool empty() const noexcept { return vertices_.empty(); }

  const VertexSet& vertices() const noexcept { return vertices_; }
  const VertexId& vertex(std::size_t i) const { return vertices_[i]; }

  std::optional<std::size_t> find(const VertexId& v) const;
  /// Throws UnknownVertex.
  std::size_t index_of(const VertexId& v) const;
  bool contains(const VertexId& v) const { return find(v).has_value(); }

  bool adjacent(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
  bool adjacent(const VertexId& u, const VertexId& v) const;
  const Bitset& row(std::size_t i) const { return rows_[i]; }
  std::size_t degree(std::size_t i) const { return rows_[i].count(); }

  VertexSet neighbors(const VertexId& v) const;
  /// N[v] = N(v) + v.
  VertexSet closed_neighbors(const VertexId& v) const;

  /// Index pairs (i < j) in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> index_edges() const;
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  VertexSet vertices_;
  std::vector<Bitset> rows_;
  std::size_t edge_count_ = 0;
};

// ---- structural edits (all pure) ----

Graph add_edge(const Graph& g, const VertexId& u, const VertexId& v);
Graph delete_edge(const Graph& g, const VertexId& u, const VertexId& v);
Graph remove_vertices(const Graph& g, const VertexSet& drop);
Graph induced_subgraph(const Graph& g, const VertexSet& keep);
/// Disjoint union; throws DuplicateVertex when names collide.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Replace `target` by target.0 (adjacent to neighbors_a) and target.1
/// (adjacent to neighbors_b). The two copies are never adjacent.
struct Split {
  VertexId target;
  VertexSet neighbors_a;
  VertexSet neighbors_b;
  friend bool operator==(const Split&, const Split&) = default;
};

using SplitSequence = std::vector<Split>;

/// Throws UnknownVertex, ForeignNeighbor, NeighborhoodNotCovered, and
/// DuplicateVertex when a copy name is already taken.
Graph apply_split(const Graph& g, const Split& s);
Graph apply_splits(Graph g, const SplitSequence& seq);

/// Inverse of a split: merge two non-adjacent vertices into `merged`, whose
/// neighborhood is the union of theirs.
Graph contract(const Graph& g, const VertexId& a, const VertexId& b, const VertexId& merged);

// ---- predicates ----

/// Every connected component is a clique.
bool is_cluster_graph(const Graph& g);
/// Independent check through the induced-P3 characterization.
bool has_induced_p3(const Graph& g);

/// Connected components as sorted vertex sets, in order of smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_clique(const Graph& g, const VertexSet& set);

/// Induced path x - center - z (xz a nonedge), stored with x < z.
struct P3 {
  VertexId x;
  VertexId center;
  VertexId z;
  friend bool operator==(const P3&, const P3&) = default;
  friend auto operator<=>(const P3&, const P3&) = default;
};

/// All induced P3s, each once, sorted lexicographically by (x, center, z).
std::vector<P3> enumerate_induced_p3(const Graph& g);

struct IsolatedRemoval {
  Graph graph;
  VertexSet removed;
  std::size_t count() const { return removed.size(); }
};

IsolatedRemoval remove_isolated(const Graph& g);
VertexSet isolated_vertices(const Graph& g);

}  // namespace splitclust
