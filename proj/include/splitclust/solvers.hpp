#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "splitclust/certificates.hpp"
#include "splitclust/instance.hpp"

namespace splitclust {

struct SolverOptions {
  std::size_t clique_limit = 14;   // SCC, NCC, CVS
  std::size_t cover_limit = 9;     // CEVS
  std::size_t packing_limit = 10;  // exact packing
  bool override_limit = false;
  bool parallel = false;
  unsigned threads = 0;            // 0: hardware concurrency
  bool exact_packing = false;      // exact packing bound at the CEVS root

  /// Defaults, with every soft limit replaced by SPLITCLUST_SIZE_LIMIT when
  /// that variable holds a positive integer.
  static SolverOptions from_env();
};

/// Hard ceiling of the bitmask search, independent of the soft limits.
inline constexpr std::size_t kMaxSearchVertices = 64;

// All solvers throw SizeLimitExceeded above their soft limit unless
// override_limit is set, and always above kMaxSearchVertices.

/// Minimum-weight sigma clique cover when its weight is at most s.
std::optional<SigmaCliqueCover> solve_scc_exact(const Graph& g, Budget s, const SolverOptions& opt = {});
/// Minimum weight of a sigma clique cover.
std::size_t scc_optimum(const Graph& g, const SolverOptions& opt = {});

/// Minimum clique partition when it has at most k parts.
std::optional<NodeCliqueCover> solve_ncc_exact(const Graph& g, Budget k, const SolverOptions& opt = {});

/// Through SCC at |V| - |I| + k and pull-out splits.
std::optional<SplitSequence> solve_cvs_exact(const Instance& inst, const SolverOptions& opt = {});

struct CevsSolution {
  Cover cover;
  ModificationSequence sequence;
};

/// A minimum-cost cover when its cost is at most k, with its edit script.
std::optional<CevsSolution> solve_cevs_exact(const Instance& inst, const SolverOptions& opt = {});
/// Minimum cover cost.
std::size_t cevs_optimum(const Graph& g, const SolverOptions& opt = {});
/// Every cover of cost at most `bound`, in canonical order.
std::vector<Cover> enumerate_covers(const Graph& g, std::size_t bound, const SolverOptions& opt = {});

/// Adds for nonedges inside a set, deletes for edges outside every set, then
/// splits. Length equals cover_cost. Throws NotACover.
ModificationSequence cover_to_modifications(const Graph& g, const Cover& c);

/// Inverse translation for normalized sequences; cost <= length.
/// Throws NotNormalized, NotAClusterGraphAfter, InapplicableStep.
Cover modifications_to_cover(const Graph& g, const ModificationSequence& m);

/// Modification-disjoint P3 packing: maximum when exact (size limit applies),
/// otherwise first-fit over the lexicographic triple order.
P3Packing max_p3_packing(const Graph& g, bool exact, const SolverOptions& opt = {});

}  // namespace splitclust
