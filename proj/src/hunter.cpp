#include "splitclust/hunter.hpp"

#include <algorithm>
#include <iomanip>
#include <mutex>
#include <set>
#include <sstream>

#include "search_util.hpp"
#include "splitclust/error.hpp"

namespace splitclust {

namespace {

using namespace detail;
using Cells = std::vector<std::vector<std::size_t>>;

// Splits cells by neighbor counts into each splitter cell until stable.
// Sub-cells are ordered by count, so the result depends only on structure.
void refine(const MaskGraph& g, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      Mask splitter = 0;
      for (auto v : cells[s]) splitter |= bit(v);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (cells[c].size() < 2) continue;
        std::map<int, std::vector<std::size_t>> by_count;
        for (auto v : cells[c]) by_count[popcount(g.adj[v] & splitter)].push_back(v);
        if (by_count.size() < 2) continue;
        Cells parts;
        for (auto& [k, vs] : by_count) parts.push_back(std::move(vs));
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), parts.begin(), parts.end());
        changed = true;
        break;
      }
    }
  }
}

std::string leaf_string(const MaskGraph& g, const Cells& cells) {
  std::string out;
  out.reserve(g.n * (g.n - 1) / 2);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      out += (g.adj[cells[i][0]] & bit(cells[j][0])) ? '1' : '0';
    }
  }
  return out;
}

bool all_twins(const MaskGraph& g, const std::vector<std::size_t>& cell) {
  const auto v = cell[0];
  for (auto w : cell) {
    const Mask a = g.adj[v] & ~bit(w);
    const Mask b = g.adj[w] & ~bit(v);
    if (a != b) return false;
  }
  return true;
}

void search(const MaskGraph& g, Cells cells, std::string& best, Cells& best_cells) {
  refine(g, cells);
  auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
  if (target == cells.end()) {
    auto s = leaf_string(g, cells);
    if (best_cells.empty() || s < best) {
      best = std::move(s);
      best_cells = cells;
    }
    return;
  }
  const auto pos = static_cast<std::size_t>(target - cells.begin());
  const auto cell = *target;
  const std::size_t branches = all_twins(g, cell) ? 1 : cell.size();
  for (std::size_t i = 0; i < branches; ++i) {
    Cells next = cells;
    std::vector<std::size_t> rest;
    for (auto v : cell) {
      if (v != cell[i]) rest.push_back(v);
    }
    next[pos] = {cell[i]};
    next.insert(next.begin() + static_cast<std::ptrdiff_t>(pos) + 1, rest);
    search(g, std::move(next), best, best_cells);
  }
}

std::pair<std::string, std::vector<std::size_t>> canonical_labelling(const Graph& g) {
  if (g.order() > 16) throw Error(ErrorKind::SizeLimitExceeded, "canonical forms are limited to 16 vertices");
  const MaskGraph mg(g);
  if (g.order() == 0) return {"", {}};
  Cells start(1);
  for (std::size_t v = 0; v < g.order(); ++v) start[0].push_back(v);
  std::string best;
  Cells best_cells;
  search(mg, std::move(start), best, best_cells);
  std::vector<std::size_t> order;
  for (const auto& c : best_cells) order.push_back(c[0]);
  return {best, order};
}

std::mutex cache_mutex;
std::map<std::size_t, std::vector<std::string>> cache;

std::vector<std::string> forms(std::size_t n) {
  if (n <= 1) return {""};
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::set<std::string> found;
  for (const auto& f : forms(n - 1)) {
    const auto base = graph_from_form(n - 1, f);
    auto edges = base.index_edges();
    for (Mask s = 0; s < bit(n - 1); ++s) {
      auto es = edges;
      for (Mask q = s; q; q &= q - 1) es.emplace_back(static_cast<std::size_t>(lowest(q)), n - 1);
      found.insert(canonical_form(Graph::indexed(n, es)));
    }
  }
  std::vector<std::string> out(found.begin(), found.end());
  if (n <= 8) {
    std::lock_guard lock(cache_mutex);
    cache.emplace(n, out);
  }
  return out;
}

bool connected(const Graph& g) { return g.order() <= 1 || connected_components(g).size() == 1; }

}  // namespace

std::string canonical_form(const Graph& g) { return canonical_labelling(g).first; }

Graph graph_from_form(std::size_t n, const std::string& form) {
  if (form.size() != n * (n - (n > 0 ? 1 : 0)) / 2) {
    throw Error(ErrorKind::ParseError, "canonical form has the wrong length for " + std::to_string(n) + " vertices");
  }
  std::vector<std::pair<std::size_t, std::size_t>> es;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++k) {
      if (form[k] == '1') es.emplace_back(i, j);
    }
  }
  return Graph::indexed(n, es);
}

Graph canonical_graph(const Graph& g) { return graph_from_form(g.order(), canonical_form(g)); }

std::vector<Graph> enumerate_graphs(std::size_t n, bool connected_only) {
  if (n > kMaxHuntVertices) {
    throw Error(ErrorKind::SizeLimitExceeded, "graph enumeration is limited to " +
                                                  std::to_string(kMaxHuntVertices) + " vertices");
  }
  std::vector<Graph> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  for (const auto& f : forms(n)) {
    auto g = graph_from_form(n, f);
    if (!connected_only || connected(g)) out.push_back(std::move(g));
  }
  return out;
}

HuntReport hunt_graph(const Graph& g, const SolverOptions& opt) {
  if (g.order() > kMaxHuntVertices && !opt.override_limit) {
    throw Error(ErrorKind::SizeLimitExceeded, "the hunt is limited to " + std::to_string(kMaxHuntVertices) + " vertices");
  }
  HuntReport r;
  r.n = g.order();
  r.canonical = canonical_form(g);
  r.graph = g;
  r.optimum = cevs_optimum(g, opt);
  const auto covers = enumerate_covers(g, r.optimum, opt);
  for (const auto& c : covers) {
    const auto cost = cover_cost(g, c).total();
    if (cost < r.optimum) throw std::logic_error("cover cheaper than the computed optimum");
    if (cost != r.optimum) continue;
    ++r.optimal_covers;
    if (cover_respects_critical_cliques(g, c)) {
      r.exists_optimum_respecting = true;
      if (!r.respecting_witness) r.respecting_witness = c;
    } else {
      r.exists_optimum_cutting = true;
      if (!r.cutting_witness) r.cutting_witness = c;
    }
  }
  return r;
}

HuntTally HuntSummary::total() const {
  HuntTally t;
  for (const auto& [n, x] : by_n) {
    t.graphs += x.graphs;
    t.cutting += x.cutting;
    t.not_respecting += x.not_respecting;
  }
  return t;
}

HuntSummary hunt(const HuntOptions& opt, const std::function<void(const HuntReport&)>& sink) {
  if (opt.max_n > kMaxHuntVertices) {
    throw Error(ErrorKind::SizeLimitExceeded, "the hunt is limited to " + std::to_string(kMaxHuntVertices) + " vertices");
  }
  HuntSummary summary;
  auto inner = opt.solver;
  inner.parallel = false;
  const auto workers = worker_count(opt.solver);
  for (std::size_t n = 1; n <= opt.max_n; ++n) {
    if (opt.resume_after && n < opt.resume_after->first) continue;
    const auto graphs = enumerate_graphs(n, opt.connected_only);
    std::size_t start = 0;
    if (opt.resume_after && n == opt.resume_after->first) start = opt.resume_after->second + 1;
    if (start >= graphs.size()) continue;
    std::vector<HuntReport> reports(graphs.size() - start);
    parallel_for(reports.size(), workers, [&](std::size_t i) {
      reports[i] = hunt_graph(graphs[start + i], inner);
      reports[i].index = start + i;
    });
    auto& tally = summary.by_n[n];
    for (const auto& r : reports) {
      ++tally.graphs;
      tally.cutting += r.exists_optimum_cutting ? 1 : 0;
      tally.not_respecting += r.exists_optimum_respecting ? 0 : 1;
      sink(r);
    }
  }
  return summary;
}

Json to_json(const HuntReport& r) {
  Json j;
  j["n"] = r.n;
  j["index"] = r.index;
  j["canonical"] = r.canonical;
  j["graph"] = to_json(r.graph);
  j["optimum"] = r.optimum;
  j["optimalCovers"] = r.optimal_covers;
  j["existsOptimumCutting"] = r.exists_optimum_cutting;
  j["existsOptimumRespecting"] = r.exists_optimum_respecting;
  j["cuttingWitness"] = r.cutting_witness ? to_json(r.cutting_witness->sets()) : Json();
  j["respectingWitness"] = r.respecting_witness ? to_json(r.respecting_witness->sets()) : Json();
  return j;
}

std::string format_summary(const HuntSummary& s) {
  std::ostringstream out;
  out << std::setw(3) << "n" << std::setw(9) << "graphs" << std::setw(9) << "cutting" << std::setw(16)
      << "no-respecting" << '\n';
  auto row = [&](const std::string& label, const HuntTally& t) {
    out << std::setw(3) << label << std::setw(9) << t.graphs << std::setw(9) << t.cutting << std::setw(16)
        << t.not_respecting << '\n';
  };
  for (const auto& [n, t] : s.by_n) row(std::to_string(n), t);
  row("all", s.total());
  return out.str();
}

}  // namespace splitclust
