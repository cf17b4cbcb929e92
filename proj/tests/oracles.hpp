#pragma once

// Brute-force reference answers. Nothing here calls the library's solvers,
// verifiers or reductions; graphs are read through adjacency queries only.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "splitclust/graph.hpp"

namespace oracle {

struct Adj {
  std::size_t n = 0;
  std::vector<std::vector<bool>> m;

  explicit Adj(const splitclust::Graph& g);
  Adj(std::size_t order, const std::vector<std::pair<std::size_t, std::size_t>>& edges);
  bool operator()(std::size_t i, std::size_t j) const { return m[i][j]; }
  std::size_t edges() const;
};

/// Every labelled graph on n vertices (n <= 5), vertices "0".."n-1".
std::vector<splitclust::Graph> all_labelled(std::size_t n);

bool is_cluster(const Adj& a);

/// Minimum total size of a family of cliques covering every edge
/// (dynamic program over covered-edge sets; at most 22 edges).
std::size_t scc_min(const Adj& a);

/// Minimum number of cliques partitioning the vertices.
std::size_t ncc_min(const Adj& a);

/// Fewest vertex splits reaching a cluster graph, searched up to `max_k`.
std::optional<std::size_t> cvs_min(const Adj& a, std::size_t max_k);

/// Minimum cover cost over all families of distinct non-empty vertex sets
/// (n <= 5).
std::size_t cevs_min(const Adj& a);

/// Number of families of distinct non-empty sets covering V with cost at
/// most `bound` (n <= 5).
std::size_t count_covers(const Adj& a, std::size_t bound);

/// Cost of a family given as vertex bitmasks; covers V is assumed.
std::size_t cover_cost(const Adj& a, const std::vector<std::uint32_t>& family);

/// Largest set of induced P3s, pairwise sharing at most one vertex and no
/// center.
std::size_t max_packing(const Adj& a);

/// Canonical string by trying every permutation (n <= 7).
std::vector<bool> brute_canonical(const Adj& a);

}  // namespace oracle
