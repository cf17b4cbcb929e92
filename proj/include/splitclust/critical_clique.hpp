#pragma once

#include <cstddef>
#include <vector>

#include "splitclust/graph.hpp"

namespace splitclust {

/// Quotient of a graph by closed-neighborhood equality.
///
/// Classes are ordered by their smallest member. `reducible[k]` holds when the
/// quotient neighborhood of class k induces a clique in the quotient graph
/// (an empty neighborhood counts as a clique).
struct CriticalCliqueGraph {
  std::vector<VertexSet> classes;
  std::vector<std::vector<bool>> adjacent;  // quotient adjacency, symmetric
  std::vector<bool> reducible;
  std::vector<std::size_t> class_of;        // indexed by vertex index of the host graph

  std::size_t size() const { return classes.size(); }
  std::vector<std::size_t> quotient_neighbors(std::size_t k) const;
  /// The quotient as a Graph on vertices "0".."size-1".
  Graph quotient() const;
};

CriticalCliqueGraph critical_clique_graph(const Graph& g);

/// Class of `v` as a vertex set.
const VertexSet& critical_clique_of(const CriticalCliqueGraph& cc, const Graph& g, const VertexId& v);

}  // namespace splitclust
