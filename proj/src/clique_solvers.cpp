#include <algorithm>
#include <atomic>
#include <climits>
#include <limits>
#include <tuple>

#include "search_util.hpp"
#include "splitclust/reductions.hpp"
#include "splitclust/solvers.hpp"

namespace splitclust {

namespace {

using namespace detail;

constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

std::size_t exclusive(std::size_t budget) { return budget == kUnbounded ? kUnbounded : budget + 1; }

// Lower bound on the independence number of g[p]: min-degree greedy.
std::size_t greedy_independent(const MaskGraph& g, Mask p) {
  std::size_t count = 0;
  while (p) {
    int pick = -1;
    int least = INT_MAX;
    for (Mask q = p; q; q &= q - 1) {
      const int x = lowest(q);
      const int d = popcount(g.adj[static_cast<std::size_t>(x)] & p);
      if (d < least) {
        least = d;
        pick = x;
        if (d == 0) break;
      }
    }
    ++count;
    p &= ~(g.adj[static_cast<std::size_t>(pick)] | bit(static_cast<std::size_t>(pick)));
  }
  return count;
}

struct SccResult {
  std::size_t weight = kUnbounded;
  std::vector<Mask> sets;
};

// Branch and bound over the clique that covers the smallest uncovered edge.
// A vertex x needs at least alpha(G[U(x)]) sets, U(x) being the far ends of
// its uncovered edges, since each set through x is a clique.
class SccSearch {
 public:
  SccSearch(const MaskGraph& g, std::vector<Mask> uncovered, std::size_t bound, std::atomic<std::size_t>* shared)
      : g_(g), unc_(std::move(uncovered)), best_(bound), shared_(shared) {}

  void choose(Mask c) {
    for (Mask q = c; q; q &= q - 1) unc_[static_cast<std::size_t>(lowest(q))] &= ~c;
    chosen_.push_back(c);
    weight_ += static_cast<std::size_t>(popcount(c));
  }

  void run() { dfs(); }

  std::size_t lower_bound() const {
    std::size_t lb = 0;
    for (std::size_t x = 0; x < g_.n; ++x) {
      if (unc_[x]) lb += greedy_independent(g_, unc_[x]);
    }
    return lb;
  }

  std::vector<Mask> candidates() const {
    std::size_t u = 0;
    while (u < g_.n && unc_[u] == 0) ++u;
    if (u == g_.n) return {};
    const auto v = static_cast<std::size_t>(lowest(unc_[u]));
    const Mask base = bit(u) | bit(v);
    std::vector<std::tuple<int, int, Mask>> ranked;
    auto consider = [&](Mask c) {
      int fresh = 0;
      for (Mask q = c; q; q &= q - 1) {
        const Mask inside = unc_[static_cast<std::size_t>(lowest(q))] & c;
        if (!inside) return;
        fresh += popcount(inside);
      }
      ranked.emplace_back(-fresh / 2, popcount(c), c);
    };
    extend(base, g_.adj[u] & g_.adj[v], consider);
    std::sort(ranked.begin(), ranked.end());
    std::vector<Mask> out;
    out.reserve(ranked.size());
    for (const auto& r : ranked) out.push_back(std::get<2>(r));
    return out;
  }

  const SccResult& result() const { return result_; }

 private:
  template <class F>
  void extend(Mask cur, Mask cand, F& visit) const {
    visit(cur);
    for (Mask q = cand; q; q &= q - 1) {
      const auto w = static_cast<std::size_t>(lowest(q));
      extend(cur | bit(w), cand & g_.adj[w] & above(w), visit);
    }
  }

  std::size_t limit() const {
    if (!shared_) return best_;
    return std::min(best_, exclusive(shared_->load(std::memory_order_relaxed)));
  }

  void dfs() {
    if (weight_ + lower_bound() >= limit()) return;
    const auto cands = candidates();
    if (cands.empty()) {
      best_ = weight_;
      result_ = SccResult{weight_, chosen_};
      if (shared_) atomic_min(*shared_, weight_);
      return;
    }
    for (Mask c : cands) {
      const auto saved = unc_;
      const auto weight = weight_;
      choose(c);
      dfs();
      unc_ = saved;
      weight_ = weight;
      chosen_.pop_back();
    }
  }

  const MaskGraph& g_;
  std::vector<Mask> unc_;
  std::vector<Mask> chosen_;
  std::size_t weight_ = 0;
  std::size_t best_;
  std::atomic<std::size_t>* shared_;
  SccResult result_;
};

// Minimum-weight cover of one component, if below `bound` (exclusive).
std::optional<SccResult> solve_component(const MaskGraph& g, Mask comp, std::size_t bound, unsigned workers) {
  std::vector<Mask> unc(g.n, 0);
  for (Mask q = comp; q; q &= q - 1) {
    const auto x = static_cast<std::size_t>(lowest(q));
    unc[x] = g.adj[x] & comp;
  }
  if (workers <= 1) {
    SccSearch s(g, unc, bound, nullptr);
    s.run();
    if (s.result().weight == kUnbounded) return std::nullopt;
    return s.result();
  }

  SccSearch root(g, unc, bound, nullptr);
  if (root.lower_bound() >= bound) return std::nullopt;
  const auto cands = root.candidates();
  std::atomic<std::size_t> shared{kUnbounded};
  std::vector<SccResult> results(cands.size());
  parallel_for(cands.size(), workers, [&](std::size_t i) {
    SccSearch s(g, unc, bound, &shared);
    s.choose(cands[i]);
    s.run();
    results[i] = s.result();
  });
  std::optional<SccResult> best;
  for (auto& r : results) {
    if (r.weight != kUnbounded && (!best || r.weight < best->weight)) best = std::move(r);
  }
  return best;
}

std::optional<std::vector<Mask>> scc_masks(const Graph& g, Budget s, const SolverOptions& opt) {
  check_limit(g, opt.clique_limit, opt, "scc");
  const MaskGraph mg(g);
  std::vector<Mask> sets;
  std::size_t remaining = s;
  for (Mask comp : edge_components(mg)) {
    auto r = solve_component(mg, comp, exclusive(remaining), worker_count(opt));
    if (!r) return std::nullopt;
    if (remaining != kUnbounded) remaining -= r->weight;
    sets.insert(sets.end(), r->sets.begin(), r->sets.end());
  }
  return sets;
}

}  // namespace

std::optional<SigmaCliqueCover> solve_scc_exact(const Graph& g, Budget s, const SolverOptions& opt) {
  auto masks = scc_masks(g, s, opt);
  if (!masks) return std::nullopt;
  std::vector<VertexSet> sets;
  for (Mask m : *masks) sets.push_back(to_set(g, m));
  return SigmaCliqueCover(std::move(sets));
}

std::size_t scc_optimum(const Graph& g, const SolverOptions& opt) {
  const auto masks = scc_masks(g, kUnbounded, opt);
  std::size_t w = 0;
  for (Mask m : *masks) w += static_cast<std::size_t>(popcount(m));
  return w;
}

// ---- NCC ----

namespace {

class PartitionSearch {
 public:
  PartitionSearch(const MaskGraph& g, std::size_t bound) : g_(g), best_(bound) {}

  void run() { dfs(0); }
  const std::vector<Mask>& best() const { return best_parts_; }
  bool found() const { return found_; }

 private:
  void dfs(std::size_t x) {
    if (parts_.size() >= best_) return;
    if (x == g_.n) {
      best_ = parts_.size();
      best_parts_ = parts_;
      found_ = true;
      return;
    }
    for (std::size_t i = 0, n = parts_.size(); i < n; ++i) {
      if (parts_[i] & ~g_.adj[x]) continue;
      parts_[i] |= bit(x);
      dfs(x + 1);
      parts_[i] &= ~bit(x);
    }
    if (parts_.size() + 1 < best_) {
      parts_.push_back(bit(x));
      dfs(x + 1);
      parts_.pop_back();
    }
  }

  const MaskGraph& g_;
  std::vector<Mask> parts_;
  std::vector<Mask> best_parts_;
  std::size_t best_;
  bool found_ = false;
};

}  // namespace

std::optional<NodeCliqueCover> solve_ncc_exact(const Graph& g, Budget k, const SolverOptions& opt) {
  check_limit(g, opt.clique_limit, opt, "ncc");
  const MaskGraph mg(g);
  PartitionSearch s(mg, static_cast<std::size_t>(std::min<Budget>(k, g.order())) + 1);
  s.run();
  if (!s.found()) return std::nullopt;
  std::vector<VertexSet> sets;
  for (Mask m : s.best()) sets.push_back(to_set(g, m));
  return NodeCliqueCover(std::move(sets));
}

// ---- CVS ----

std::optional<SplitSequence> solve_cvs_exact(const Instance& inst, const SolverOptions& opt) {
  expect_problem(inst, Problem::CVS);
  const auto scc = convert_cvs_scc(inst);
  auto cover = solve_scc_exact(inst.graph, scc.budget, opt);
  if (!cover) return std::nullopt;
  return cover_to_splits(remove_isolated(inst.graph).graph, *cover);
}

}  // namespace splitclust
