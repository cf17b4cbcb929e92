#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "splitclust/graph.hpp"

namespace splitclust {

/// NCC: at most k cliques covering all vertices.
/// SCC: clique family covering all edges with total size at most s.
/// CVS: at most k vertex splits to a cluster graph.
/// CEVS: at most k splits, edge additions or deletions to a cluster graph.
enum class Problem { NCC, SCC, CVS, CEVS };

std::string_view to_string(Problem p);   // "ncc", "scc", ...
std::optional<Problem> parse_problem(std::string_view s);

using Budget = std::uint64_t;

struct Instance {
  Problem problem;
  Graph graph;
  Budget budget = 0;
  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Throws WrongProblem unless inst.problem == expected.
void expect_problem(const Instance& inst, Problem expected);

}  // namespace splitclust
