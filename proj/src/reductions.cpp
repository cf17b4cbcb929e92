#include "splitclust/reductions.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

#include "splitclust/error.hpp"

namespace splitclust {

std::string_view to_string(ReductionKind k) {
  switch (k) {
    case ReductionKind::NccToScc: return "ncc->scc";
    case ReductionKind::CvsToScc: return "cvs->scc";
    case ReductionKind::SccToCvs: return "scc->cvs";
    case ReductionKind::CvsToCevs: return "cvs->cevs";
  }
  return "?";
}

namespace {

Problem source_of(ReductionKind k) {
  switch (k) {
    case ReductionKind::NccToScc: return Problem::NCC;
    case ReductionKind::SccToCvs: return Problem::SCC;
    case ReductionKind::CvsToScc:
    case ReductionKind::CvsToCevs: return Problem::CVS;
  }
  return Problem::CVS;
}

std::size_t isolated_count(const Graph& g) { return isolated_vertices(g).size(); }

}  // namespace

// ---- NCC -> SCC ----

UniversalExtension extend_universal(const Graph& g, std::size_t ell) {
  UniversalExtension out;
  VertexSet vs = g.vertices();
  std::vector<Edge> es = g.edges();
  std::string prefix = "u";
  auto clashes = [&] {
    for (std::size_t i = 1; i <= ell; ++i) {
      if (g.contains(VertexId(prefix + std::to_string(i)))) return true;
    }
    return false;
  };
  while (clashes()) prefix = "_" + prefix;
  for (std::size_t i = 1; i <= ell; ++i) {
    VertexId u(prefix + std::to_string(i));
    out.universal.push_back(u);
    vs.push_back(u);
    for (const auto& v : g.vertices()) es.push_back(make_edge(u, v));
  }
  normalize(out.universal);
  out.graph = Graph(std::move(vs), es);
  return out;
}

namespace {

std::size_t ncc_ell(const Graph& g) { return 2 * g.edge_count() + 1; }

}  // namespace

std::pair<Instance, ReductionTrace> reduce_ncc_to_scc(const Instance& inst) {
  expect_problem(inst, Problem::NCC);
  const auto ell = ncc_ell(inst.graph);
  auto ext = extend_universal(inst.graph, ell);
  const Budget s = ell * (inst.graph.order() + inst.budget + 1) - 1;
  Instance to{Problem::SCC, std::move(ext.graph), s};
  ReductionTrace t{inst, to, ReductionKind::NccToScc, {{"ell", ell}}};
  return {std::move(to), std::move(t)};
}

SigmaCliqueCover translate_ncc_cert_to_scc(const Instance& ncc_inst, const NodeCliqueCover& ncc) {
  expect_problem(ncc_inst, Problem::NCC);
  const auto& g = ncc_inst.graph;
  try {
    if (auto r = verify_node_cover(g, ncc, ncc_inst.budget); !r.valid) {
      throw Error(ErrorKind::InvalidCertificate, "node clique cover rejected: " + r.reason);
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidCertificate) throw;
    throw Error(ErrorKind::InvalidCertificate, e.what());
  }
  const auto ell = ncc_ell(g);
  const auto ext = extend_universal(g, ell);

  std::vector<VertexSet> partition;
  std::set<VertexId> seen;
  for (const auto& c : ncc.sets()) {
    VertexSet part;
    for (const auto& v : c) {
      if (seen.insert(v).second) part.push_back(v);
    }
    if (!part.empty()) partition.push_back(std::move(part));
  }

  std::vector<VertexSet> sets;
  for (const auto& part : partition) {
    for (const auto& u : ext.universal) {
      VertexSet c = part;
      c.push_back(u);
      sets.push_back(normalize(c));
    }
  }
  for (const auto& e : g.edges()) sets.push_back(VertexSet{e.u, e.v});
  return SigmaCliqueCover(std::move(sets));
}

NodeCliqueCover translate_scc_cert_to_ncc(const Instance& ncc_inst, const SigmaCliqueCover& scc) {
  expect_problem(ncc_inst, Problem::NCC);
  const auto reduced = reduce_ncc_to_scc(ncc_inst).first;
  const auto ext = extend_universal(ncc_inst.graph, ncc_ell(ncc_inst.graph));
  try {
    if (auto r = verify_sigma_cover(reduced.graph, scc, reduced.budget); !r.valid) {
      throw Error(ErrorKind::InvalidCertificate, "sigma clique cover rejected: " + r.reason);
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidCertificate) throw;
    throw Error(ErrorKind::InvalidCertificate, e.what());
  }

  const VertexId* best = nullptr;
  std::size_t best_weight = std::numeric_limits<std::size_t>::max();
  for (const auto& u : ext.universal) {
    std::size_t w = 0;
    for (const auto& c : scc.sets()) {
      if (std::binary_search(c.begin(), c.end(), u)) w += c.size();
    }
    if (w < best_weight) {
      best_weight = w;
      best = &u;
    }
  }
  std::vector<VertexSet> out;
  if (best != nullptr) {
    for (const auto& c : scc.sets()) {
      if (!std::binary_search(c.begin(), c.end(), *best)) continue;
      VertexSet rest;
      for (const auto& v : c) {
        if (v != *best) rest.push_back(v);
      }
      if (!rest.empty()) out.push_back(std::move(rest));
    }
  }
  NodeCliqueCover result(std::move(out));
  if (result.size() > ncc_inst.budget) {
    throw std::logic_error("recovered node clique cover exceeds the budget");
  }
  return result;
}

// ---- CVS <-> SCC ----

SplitSequence cover_to_splits(const Graph& g, const SigmaCliqueCover& scc) {
  if (auto iso = isolated_vertices(g); !iso.empty()) {
    throw Error(ErrorKind::IsolatedVertexPresent, "vertex '" + iso.front().str() + "' is isolated");
  }
  try {
    if (auto r = verify_sigma_cover(g, scc, scc.weight()); !r.valid) {
      throw Error(ErrorKind::InvalidCertificate, "sigma clique cover rejected: " + r.reason);
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidCertificate) throw;
    throw Error(ErrorKind::InvalidCertificate, e.what());
  }

  std::vector<VertexSet> cover;
  for (const auto& c : scc.sets()) {
    if (c.size() >= 2) cover.push_back(c);
  }
  Graph h = g;
  SplitSequence out;
  auto contains = [](const VertexSet& c, const VertexId& v) {
    return std::binary_search(c.begin(), c.end(), v);
  };

  while (true) {
    std::optional<VertexId> pick;
    for (const auto& u : h.vertices()) {
      std::size_t n = 0;
      for (const auto& c : cover) n += contains(c, u) ? 1 : 0;
      if (n >= 2) {
        pick = u;
        break;
      }
    }
    if (!pick) break;
    const VertexId u = *pick;
    const auto c1 = static_cast<std::size_t>(
        std::find_if(cover.begin(), cover.end(), [&](const VertexSet& c) { return contains(c, u); }) -
        cover.begin());

    Split s{u, {}, {}};
    for (const auto& v : h.neighbors(u)) {
      if (contains(cover[c1], v)) {
        s.neighbors_a.push_back(v);
        for (std::size_t i = 0; i < cover.size(); ++i) {
          if (i != c1 && contains(cover[i], u) && contains(cover[i], v)) {
            s.neighbors_b.push_back(v);
            break;
          }
        }
      } else {
        s.neighbors_b.push_back(v);
      }
    }
    h = apply_split(h, s);
    out.push_back(s);

    const auto u_in = u.child(0);
    const auto u_out = u.child(1);
    for (std::size_t i = 0; i < cover.size(); ++i) {
      if (!contains(cover[i], u)) continue;
      std::replace(cover[i].begin(), cover[i].end(), u, i == c1 ? u_in : u_out);
      normalize(cover[i]);
    }
    std::sort(cover.begin(), cover.end());
    std::size_t in_valency = 0;
    for (const auto& c : cover) in_valency += contains(c, u_in) ? 1 : 0;
    if (in_valency != 1) throw std::logic_error("pulled-out copy is not covered exactly once");
  }
  if (!is_cluster_graph(h)) throw std::logic_error("pull-out splits did not reach a cluster graph");
  return out;
}

SigmaCliqueCover splits_to_cover(const Graph& g, const SplitSequence& seq) {
  const Graph final_graph = apply_splits(g, seq);
  if (!is_cluster_graph(final_graph)) {
    throw Error(ErrorKind::NotAClusterGraphAfter, "splits leave an induced P3");
  }
  std::vector<VertexSet> cover;
  for (auto& c : connected_components(final_graph)) {
    if (c.size() >= 2) cover.push_back(std::move(c));
  }
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    const auto a = it->target.child(0);
    const auto b = it->target.child(1);
    for (auto& c : cover) {
      for (auto& v : c) {
        if (v == a || v == b) v = it->target;
      }
      normalize(c);
    }
  }
  return SigmaCliqueCover(SetFamily::deduplicated(std::move(cover)));
}

Instance convert_cvs_scc(const Instance& inst) {
  expect_problem(inst, Problem::CVS);
  return Instance{Problem::SCC, inst.graph,
                  inst.graph.order() - isolated_count(inst.graph) + inst.budget};
}

Instance convert_scc_cvs(const Instance& inst) {
  expect_problem(inst, Problem::SCC);
  const Budget base = inst.graph.order() - isolated_count(inst.graph);
  if (inst.budget < base) {
    throw Error(ErrorKind::BudgetUnderflow, "budget " + std::to_string(inst.budget) + " is below |V| - |I| = " +
                                                std::to_string(base) + "; trivially negative");
  }
  return Instance{Problem::CVS, inst.graph, inst.budget - base};
}

// ---- CVS -> CEVS ----

BlowUp blow_up(const Graph& g, std::size_t size) {
  BlowUp out;
  VertexSet vs;
  for (const auto& v : g.vertices()) {
    auto& copies = out.copies[v];
    for (std::size_t i = 1; i <= size; ++i) {
      auto id = VertexId(v.root() + "_" + std::to_string(i));
      for (auto b : v.branches()) id = id.child(b);
      copies.push_back(id);
      vs.push_back(id);
    }
    normalize(copies);
  }
  std::vector<Edge> es;
  for (const auto& [v, copies] : out.copies) {
    for (std::size_t i = 0; i < copies.size(); ++i) {
      for (std::size_t j = i + 1; j < copies.size(); ++j) es.push_back(make_edge(copies[i], copies[j]));
    }
  }
  for (const auto& e : g.edges()) {
    for (const auto& a : out.copies.at(e.u)) {
      for (const auto& b : out.copies.at(e.v)) es.push_back(make_edge(a, b));
    }
  }
  out.graph = Graph(std::move(vs), es);
  return out;
}

std::pair<Instance, ReductionTrace> reduce_cvs_to_cevs(const Instance& inst) {
  expect_problem(inst, Problem::CVS);
  if (auto iso = isolated_vertices(inst.graph); !iso.empty()) {
    throw Error(ErrorKind::IsolatedVertexPresent, "vertex '" + iso.front().str() + "' is isolated");
  }
  const auto k = inst.budget;
  Instance to{Problem::CEVS, blow_up(inst.graph, k + 1).graph, k * (k + 1)};
  ReductionTrace t{inst, to, ReductionKind::CvsToCevs, {{"clique_size", k + 1}}};
  return {std::move(to), std::move(t)};
}

// ---- dispatch, replay, serialization ----

std::pair<Instance, ReductionTrace> reduce(const Instance& inst, ReductionKind kind) {
  expect_problem(inst, source_of(kind));
  switch (kind) {
    case ReductionKind::NccToScc: return reduce_ncc_to_scc(inst);
    case ReductionKind::CvsToCevs: return reduce_cvs_to_cevs(inst);
    case ReductionKind::CvsToScc: {
      auto to = convert_cvs_scc(inst);
      ReductionTrace t{inst, to, kind, {{"isolated", isolated_count(inst.graph)}}};
      return {std::move(to), std::move(t)};
    }
    case ReductionKind::SccToCvs: {
      auto to = convert_scc_cvs(inst);
      ReductionTrace t{inst, to, kind, {{"isolated", isolated_count(inst.graph)}}};
      return {std::move(to), std::move(t)};
    }
  }
  throw std::logic_error("unknown reduction");
}

Instance replay(const ReductionTrace& t) {
  auto [to, fresh] = reduce(t.from, t.kind);
  if (fresh.parameters != t.parameters) {
    throw Error(ErrorKind::InvalidCertificate, "trace parameters do not match the reduction");
  }
  if (!(to == t.to)) throw Error(ErrorKind::InvalidCertificate, "trace target does not match the reduction");
  return to;
}

Json to_json(const ReductionTrace& t) {
  Json out;
  out["kind"] = std::string(to_string(t.kind));
  Json params = Json::object();
  for (const auto& [k, v] : t.parameters) params[k] = v;
  out["parameters"] = std::move(params);
  out["from"] = to_json(t.from);
  out["to"] = to_json(t.to);
  return out;
}

ReductionTrace trace_from_json(const Json& j) {
  auto bad = [](const std::string& m) { return Error(ErrorKind::InvalidCertificate, m); };
  if (!j.is_object() || !j.contains("kind") || !j.contains("from") || !j.contains("to")) {
    throw bad("reduction trace needs kind, from and to");
  }
  ReductionTrace t;
  const auto kind = j["kind"].is_string() ? j["kind"].get<std::string>() : std::string();
  bool found = false;
  for (auto k : {ReductionKind::NccToScc, ReductionKind::CvsToScc, ReductionKind::SccToCvs,
                 ReductionKind::CvsToCevs}) {
    if (kind == to_string(k)) {
      t.kind = k;
      found = true;
    }
  }
  if (!found) throw bad("unknown reduction kind '" + kind + "'");
  if (j.contains("parameters")) {
    for (const auto& [k, v] : j["parameters"].items()) {
      if (!v.is_number_unsigned()) throw bad("parameters must be non-negative integers");
      t.parameters[k] = v.get<std::uint64_t>();
    }
  }
  t.from = instance_from_json(j["from"]);
  t.to = instance_from_json(j["to"]);
  return t;
}

}  // namespace splitclust
