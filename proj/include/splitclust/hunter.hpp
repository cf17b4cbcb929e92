#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "splitclust/certificates.hpp"
#include "splitclust/json.hpp"
#include "splitclust/solvers.hpp"

namespace splitclust {

inline constexpr std::size_t kMaxHuntVertices = 9;

/// Upper-triangle adjacency bits ('0'/'1', row-major over i < j) of the
/// relabelling that minimizes the string among all labellings consistent
/// with equitable refinement and individualization. Equal iff isomorphic.
std::string canonical_form(const Graph& g);

/// Graph on "0".."n-1" whose upper-triangle bits are `form`.
Graph graph_from_form(std::size_t n, const std::string& form);

/// canonical_form(g) realised as a graph on "0".."n-1".
Graph canonical_graph(const Graph& g);

/// One graph per isomorphism class, sorted by canonical form. Classes for
/// n <= 8 are cached. Throws SizeLimitExceeded for n > 9.
std::vector<Graph> enumerate_graphs(std::size_t n, bool connected_only);

struct HuntReport {
  std::size_t n = 0;
  std::size_t index = 0;  // position in enumerate_graphs(n, ...)
  std::string canonical;
  Graph graph;
  std::size_t optimum = 0;
  std::size_t optimal_covers = 0;
  bool exists_optimum_cutting = false;
  bool exists_optimum_respecting = false;
  std::optional<Cover> cutting_witness;
  std::optional<Cover> respecting_witness;
};

/// Exact CEVS optimum of g, every cover at that cost, and the two flags.
HuntReport hunt_graph(const Graph& g, const SolverOptions& opt = {});

struct HuntOptions {
  std::size_t max_n = 5;
  bool connected_only = false;
  /// Skip everything up to and including this (n, index).
  std::optional<std::pair<std::size_t, std::size_t>> resume_after;
  SolverOptions solver;
};

struct HuntTally {
  std::size_t graphs = 0;
  std::size_t cutting = 0;         // some optimum cuts a critical clique
  std::size_t not_respecting = 0;  // no optimum respects all critical cliques
};

struct HuntSummary {
  std::map<std::size_t, HuntTally> by_n;
  HuntTally total() const;
};

/// Streams one report per graph in (n, index) order; parallel over graphs
/// when opt.solver.parallel is set.
HuntSummary hunt(const HuntOptions& opt, const std::function<void(const HuntReport&)>& sink);

Json to_json(const HuntReport& r);
std::string format_summary(const HuntSummary& s);

}  // namespace splitclust
