#include "splitclust/critical_clique.hpp"

#include <algorithm>
#include <numeric>

namespace splitclust {

std::vector<std::size_t> CriticalCliqueGraph::quotient_neighbors(std::size_t k) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < classes.size(); ++j) {
    if (adjacent[k][j]) out.push_back(j);
  }
  return out;
}

Graph CriticalCliqueGraph::quotient() const {
  std::vector<std::pair<std::size_t, std::size_t>> es;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      if (adjacent[i][j]) es.emplace_back(i, j);
    }
  }
  return Graph::indexed(classes.size(), es);
}

CriticalCliqueGraph critical_clique_graph(const Graph& g) {
  const auto n = g.order();
  std::vector<Bitset> closed(n);
  for (std::size_t i = 0; i < n; ++i) {
    closed[i] = g.row(i);
    closed[i].set(i);
  }
  // Sorting by closed-neighborhood key groups equal keys; stable so that
  // classes come out ordered by smallest member after the relabel below.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return closed[a] < closed[b]; });

  std::vector<std::size_t> group(n);
  std::vector<std::size_t> first_member;
  for (std::size_t p = 0; p < n; ++p) {
    if (p == 0 || closed[order[p]] != closed[order[p - 1]]) first_member.push_back(order[p]);
    group[order[p]] = first_member.size() - 1;
  }
  // Relabel groups by smallest member.
  std::vector<std::size_t> by_min(first_member.size());
  std::iota(by_min.begin(), by_min.end(), 0);
  std::vector<std::size_t> min_member(first_member.size(), n);
  for (std::size_t v = 0; v < n; ++v) min_member[group[v]] = std::min(min_member[group[v]], v);
  std::sort(by_min.begin(), by_min.end(),
            [&](std::size_t a, std::size_t b) { return min_member[a] < min_member[b]; });
  std::vector<std::size_t> relabel(first_member.size());
  for (std::size_t k = 0; k < by_min.size(); ++k) relabel[by_min[k]] = k;

  CriticalCliqueGraph cc;
  const auto m = first_member.size();
  cc.classes.resize(m);
  cc.class_of.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    const auto k = relabel[group[v]];
    cc.class_of[v] = k;
    cc.classes[k].push_back(g.vertex(v));
  }
  cc.adjacent.assign(m, std::vector<bool>(m, false));
  for (auto [i, j] : g.index_edges()) {
    const auto a = cc.class_of[i];
    const auto b = cc.class_of[j];
    if (a != b) {
      cc.adjacent[a][b] = true;
      cc.adjacent[b][a] = true;
    }
  }
  cc.reducible.assign(m, true);
  for (std::size_t k = 0; k < m; ++k) {
    const auto nb = cc.quotient_neighbors(k);
    for (std::size_t x = 0; x < nb.size() && cc.reducible[k]; ++x) {
      for (std::size_t y = x + 1; y < nb.size(); ++y) {
        if (!cc.adjacent[nb[x]][nb[y]]) {
          cc.reducible[k] = false;
          break;
        }
      }
    }
  }
  return cc;
}

const VertexSet& critical_clique_of(const CriticalCliqueGraph& cc, const Graph& g, const VertexId& v) {
  return cc.classes[cc.class_of[g.index_of(v)]];
}

}  // namespace splitclust
