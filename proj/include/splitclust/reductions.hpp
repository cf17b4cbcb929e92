#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "splitclust/certificates.hpp"
#include "splitclust/instance.hpp"
#include "splitclust/json.hpp"

namespace splitclust {

enum class ReductionKind { NccToScc, CvsToScc, SccToCvs, CvsToCevs };

std::string_view to_string(ReductionKind k);  // "ncc->scc", ...

struct ReductionTrace {
  Instance from;
  Instance to;
  ReductionKind kind = ReductionKind::NccToScc;
  std::map<std::string, std::uint64_t> parameters;
  friend bool operator==(const ReductionTrace&, const ReductionTrace&) = default;
};

/// Dispatches to the reduction named by `kind`. Throws WrongProblem when
/// inst.problem does not match the source problem of `kind`.
std::pair<Instance, ReductionTrace> reduce(const Instance& inst, ReductionKind kind);

/// Recomputes `to` from `from` and `kind`; throws InvalidCertificate when the
/// recorded parameters or target disagree.
Instance replay(const ReductionTrace& t);

Json to_json(const ReductionTrace& t);
ReductionTrace trace_from_json(const Json& j);

// ---- NCC -> SCC ----

struct UniversalExtension {
  Graph graph;
  VertexSet universal;  // u1..u_ell, prefixed with '_' until fresh
};

/// G^ell: ell pairwise non-adjacent vertices, each adjacent to all of V(g).
UniversalExtension extend_universal(const Graph& g, std::size_t ell);

/// (G, s) -> (G^ell, ell(|V|+s+1)-1) with ell = 2|E|+1.
std::pair<Instance, ReductionTrace> reduce_ncc_to_scc(const Instance& inst);

/// Disjointifies `ncc` and returns {C + u_i} plus every edge as a pair.
/// Throws InvalidCertificate unless ncc is valid for `ncc_inst`.
SigmaCliqueCover translate_ncc_cert_to_scc(const Instance& ncc_inst, const NodeCliqueCover& ncc);

/// Sets through the universal vertex of least incident weight, minus that
/// vertex. Throws InvalidCertificate unless scc is valid for the reduced instance.
NodeCliqueCover translate_scc_cert_to_ncc(const Instance& ncc_inst, const SigmaCliqueCover& scc);

// ---- CVS <-> SCC ----

/// Repeated pull-out splits turning g into a cluster graph. Sets of size <= 1
/// are dropped first; the result has weight(pruned) - |V| splits.
/// Throws IsolatedVertexPresent, InvalidCertificate.
SplitSequence cover_to_splits(const Graph& g, const SigmaCliqueCover& scc);

/// Non-trivial components of the final cluster graph, mapped back through the
/// splits. Weight <= |V| - |I| + |seq|. Throws NotAClusterGraphAfter.
SigmaCliqueCover splits_to_cover(const Graph& g, const SplitSequence& seq);

/// (G, k) -> (G, |V| - |I| + k).
Instance convert_cvs_scc(const Instance& inst);
/// (G, s) -> (G, s - |V| + |I|). Throws BudgetUnderflow when s < |V| - |I|.
Instance convert_scc_cvs(const Instance& inst);

// ---- CVS -> CEVS ----

struct BlowUp {
  Graph graph;
  std::map<VertexId, VertexSet> copies;  // original vertex -> its clique
};

/// Every vertex v becomes the clique {v_1 .. v_size}; adjacent vertices'
/// cliques are completely joined.
BlowUp blow_up(const Graph& g, std::size_t size);

/// (G, k) -> (blow_up(G, k+1), k(k+1)). Throws IsolatedVertexPresent.
std::pair<Instance, ReductionTrace> reduce_cvs_to_cevs(const Instance& inst);

}  // namespace splitclust
