#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <set>
#include <tuple>

#include "search_util.hpp"
#include "splitclust/solvers.hpp"

namespace splitclust {

namespace {

using namespace detail;

struct Triple {
  std::size_t x, y, z;  // y is the center
};

struct Context {
  const MaskGraph& g;
  std::vector<std::size_t> order;
  std::vector<Triple> p3;

  explicit Context(const MaskGraph& mg) : g(mg) {
    const auto n = g.n;
    Mask placed = 0;
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t pick = n;
      for (std::size_t v = 0; v < n; ++v) {
        if (placed & bit(v)) continue;
        if (pick == n) {
          pick = v;
          continue;
        }
        const auto key = [&](std::size_t w) {
          return std::make_pair(popcount(g.adj[w] & placed), popcount(g.adj[w]));
        };
        if (key(v) > key(pick)) pick = v;
      }
      order.push_back(pick);
      placed |= bit(pick);
    }
    for (std::size_t y = 0; y < n; ++y) {
      for (Mask q = g.adj[y]; q; q &= q - 1) {
        const auto x = static_cast<std::size_t>(lowest(q));
        for (Mask r = g.adj[y] & ~g.adj[x] & above(x); r; r &= r - 1) {
          p3.push_back({x, y, static_cast<std::size_t>(lowest(r))});
        }
      }
    }
  }
};

struct Node {
  std::vector<Mask> labels;
  Mask placed = 0;
  std::size_t cost = 0;
  std::size_t depth = 0;
};

// Each vertex, in placement order, joins some existing labels and opens some
// new ones. The cost of the pairs it forms with already placed vertices and
// its own overlap are charged on placement, so `cost` is exact for the placed
// prefix. Labels with equal member sets are interchangeable; only the first
// c of such a group are ever joined.
class CoverSearch {
 public:
  enum class Mode { Decide, Enumerate, Frontier };

  CoverSearch(const Context& ctx, Mode mode, std::size_t bound) : ctx_(ctx), mode_(mode), bound_(bound) {}

  void set_stop(const std::atomic<std::size_t>* first_found, std::size_t task) {
    first_found_ = first_found;
    task_ = task;
  }
  void set_frontier_depth(std::size_t d) { frontier_depth_ = d; }

  void run(Node node) {
    node_ = std::move(node);
    dfs();
  }

  std::size_t lower_bound() const {
    const auto& g = ctx_.g;
    std::vector<Mask> tog(g.n, 0);
    std::vector<int> count(g.n, 0);
    for (Mask l : node_.labels) {
      for (Mask q = l; q; q &= q - 1) {
        const auto v = static_cast<std::size_t>(lowest(q));
        tog[v] |= l;
        ++count[v];
      }
    }
    const Mask placed = node_.placed;
    auto both = [&](std::size_t a, std::size_t b) { return (placed & bit(a)) && (placed & bit(b)); };
    std::vector<Mask> used(g.n, 0);
    Mask centers = 0;
    std::size_t lb = 0;
    for (const auto& t : ctx_.p3) {
      if (both(t.x, t.y) && !(tog[t.x] & bit(t.y))) continue;
      if (both(t.y, t.z) && !(tog[t.y] & bit(t.z))) continue;
      if (both(t.x, t.z) && (tog[t.x] & bit(t.z))) continue;
      if ((placed & bit(t.y)) && count[t.y] >= 2) continue;
      if ((centers & bit(t.y)) || (used[t.x] & (bit(t.y) | bit(t.z))) || (used[t.y] & bit(t.z))) continue;
      centers |= bit(t.y);
      used[t.x] |= bit(t.y) | bit(t.z);
      used[t.y] |= bit(t.x) | bit(t.z);
      used[t.z] |= bit(t.x) | bit(t.y);
      ++lb;
    }
    return lb;
  }

  bool found() const { return found_; }
  const std::vector<Mask>& solution() const { return solution_; }
  const std::set<std::vector<Mask>>& covers() const { return covers_; }
  std::vector<Node>& frontier() { return frontier_; }

 private:
  struct Choice {
    std::size_t delta;
    std::vector<std::size_t> counts;  // per group
    std::size_t fresh;
  };

  bool stopped() const {
    if (mode_ != Mode::Decide) return false;
    if (found_) return true;
    return first_found_ && first_found_->load(std::memory_order_relaxed) < task_;
  }

  void leaf() {
    if (mode_ == Mode::Decide) {
      found_ = true;
      solution_ = node_.labels;
      return;
    }
    auto cover = node_.labels;
    std::sort(cover.begin(), cover.end());
    cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
    covers_.insert(std::move(cover));
  }

  void dfs() {
    if (stopped()) return;
    const auto& g = ctx_.g;
    if (mode_ == Mode::Frontier && node_.depth == frontier_depth_) {
      frontier_.push_back(node_);
      return;
    }
    if (node_.depth == g.n) {
      leaf();
      return;
    }
    if (node_.cost + lower_bound() > bound_) return;

    const auto x = ctx_.order[node_.depth];
    const Mask adj = g.adj[x];
    const std::size_t slack = bound_ - node_.cost;

    std::vector<Mask> group_mask;
    std::vector<std::vector<std::size_t>> group_members;
    for (std::size_t i = 0; i < node_.labels.size(); ++i) {
      auto it = std::find(group_mask.begin(), group_mask.end(), node_.labels[i]);
      if (it == group_mask.end()) {
        group_mask.push_back(node_.labels[i]);
        group_members.push_back({i});
      } else {
        group_members[static_cast<std::size_t>(it - group_mask.begin())].push_back(i);
      }
    }

    std::vector<Choice> choices;
    std::vector<std::size_t> counts(group_mask.size(), 0);
    const auto max_labels = slack + 1;
    auto emit = [&](Mask together, std::size_t joined) {
      for (std::size_t fresh = joined == 0 ? 1 : 0; joined + fresh <= max_labels; ++fresh) {
        const auto delta = static_cast<std::size_t>(popcount(together & ~adj) +
                                                    popcount(node_.placed & adj & ~together)) +
                           joined + fresh - 1;
        if (delta > slack) break;
        choices.push_back({delta, counts, fresh});
      }
    };
    auto walk = [&](auto&& self, std::size_t gi, Mask together, std::size_t joined) -> void {
      if (joined > max_labels) return;
      if (gi == group_mask.size()) {
        emit(together, joined);
        return;
      }
      for (std::size_t c = 0; c <= group_members[gi].size() && joined + c <= max_labels; ++c) {
        counts[gi] = c;
        self(self, gi + 1, c ? together | group_mask[gi] : together, joined + c);
      }
      counts[gi] = 0;
    };
    walk(walk, 0, 0, 0);
    std::stable_sort(choices.begin(), choices.end(),
                     [](const Choice& a, const Choice& b) { return a.delta < b.delta; });

    for (const auto& ch : choices) {
      if (stopped()) return;
      for (std::size_t gi = 0; gi < ch.counts.size(); ++gi) {
        for (std::size_t c = 0; c < ch.counts[gi]; ++c) node_.labels[group_members[gi][c]] |= bit(x);
      }
      for (std::size_t f = 0; f < ch.fresh; ++f) node_.labels.push_back(bit(x));
      node_.placed |= bit(x);
      node_.cost += ch.delta;
      ++node_.depth;

      dfs();

      --node_.depth;
      node_.cost -= ch.delta;
      node_.placed &= ~bit(x);
      node_.labels.resize(node_.labels.size() - ch.fresh);
      for (std::size_t gi = 0; gi < ch.counts.size(); ++gi) {
        for (std::size_t c = 0; c < ch.counts[gi]; ++c) node_.labels[group_members[gi][c]] &= ~bit(x);
      }
    }
  }

  const Context& ctx_;
  Mode mode_;
  std::size_t bound_;
  Node node_;
  std::size_t frontier_depth_ = 0;
  std::vector<Node> frontier_;
  const std::atomic<std::size_t>* first_found_ = nullptr;
  std::size_t task_ = 0;
  bool found_ = false;
  std::vector<Mask> solution_;
  std::set<std::vector<Mask>> covers_;
};

std::vector<Node> split_work(const Context& ctx, std::size_t bound, unsigned workers) {
  std::vector<Node> nodes{Node{}};
  for (std::size_t depth = 1; depth <= ctx.g.n && nodes.size() < 8 * workers; ++depth) {
    CoverSearch s(ctx, CoverSearch::Mode::Frontier, bound);
    s.set_frontier_depth(depth);
    s.run(Node{});
    nodes = std::move(s.frontier());
    if (nodes.empty()) break;
  }
  return nodes;
}

std::optional<std::vector<Mask>> decide(const Context& ctx, std::size_t bound, unsigned workers) {
  if (workers <= 1) {
    CoverSearch s(ctx, CoverSearch::Mode::Decide, bound);
    s.run(Node{});
    if (!s.found()) return std::nullopt;
    return s.solution();
  }
  const auto nodes = split_work(ctx, bound, workers);
  std::atomic<std::size_t> first{std::numeric_limits<std::size_t>::max()};
  std::vector<std::optional<std::vector<Mask>>> results(nodes.size());
  parallel_for(nodes.size(), workers, [&](std::size_t i) {
    if (first.load() < i) return;
    CoverSearch s(ctx, CoverSearch::Mode::Decide, bound);
    s.set_stop(&first, i);
    s.run(nodes[i]);
    if (s.found()) {
      results[i] = s.solution();
      atomic_min(first, i);
    }
  });
  for (auto& r : results) {
    if (r) return r;
  }
  return std::nullopt;
}

std::set<std::vector<Mask>> enumerate(const Context& ctx, std::size_t bound, unsigned workers) {
  const auto nodes = workers <= 1 ? std::vector<Node>{Node{}} : split_work(ctx, bound, workers);
  std::vector<std::set<std::vector<Mask>>> results(nodes.size());
  parallel_for(nodes.size(), workers, [&](std::size_t i) {
    CoverSearch s(ctx, CoverSearch::Mode::Enumerate, bound);
    s.run(nodes[i]);
    results[i] = s.covers();
  });
  std::set<std::vector<Mask>> all;
  for (auto& r : results) all.insert(r.begin(), r.end());
  return all;
}

Cover to_cover(const Graph& g, std::vector<Mask> labels) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  std::vector<VertexSet> sets;
  for (Mask m : labels) sets.push_back(to_set(g, m));
  return Cover(std::move(sets));
}

std::size_t root_bound(const Graph& g, const Context& ctx, const SolverOptions& opt) {
  CoverSearch s(ctx, CoverSearch::Mode::Decide, 0);
  std::size_t lb = s.lower_bound();
  if (opt.exact_packing && g.order() <= opt.packing_limit) lb = std::max(lb, max_p3_packing(g, true, opt).size());
  return lb;
}

// Minimum-cost cover of cost <= cap, by iterative deepening from the packing bound.
std::optional<std::vector<Mask>> minimum_cover(const Graph& g, std::size_t cap, const SolverOptions& opt) {
  check_limit(g, opt.cover_limit, opt, "cevs");
  const MaskGraph mg(g);
  const Context ctx(mg);
  cap = std::min(cap, g.edge_count());
  for (std::size_t b = root_bound(g, ctx, opt); b <= cap; ++b) {
    if (auto r = decide(ctx, b, worker_count(opt))) return r;
  }
  return std::nullopt;
}

}  // namespace

std::optional<CevsSolution> solve_cevs_exact(const Instance& inst, const SolverOptions& opt) {
  expect_problem(inst, Problem::CEVS);
  auto labels = minimum_cover(inst.graph, static_cast<std::size_t>(inst.budget), opt);
  if (!labels) return std::nullopt;
  auto cover = to_cover(inst.graph, std::move(*labels));
  auto seq = cover_to_modifications(inst.graph, cover);
  return CevsSolution{std::move(cover), std::move(seq)};
}

std::size_t cevs_optimum(const Graph& g, const SolverOptions& opt) {
  auto labels = minimum_cover(g, g.edge_count(), opt);
  return cover_cost(g, to_cover(g, std::move(*labels))).total();
}

std::vector<Cover> enumerate_covers(const Graph& g, std::size_t bound, const SolverOptions& opt) {
  check_limit(g, opt.cover_limit, opt, "cevs");
  const MaskGraph mg(g);
  const Context ctx(mg);
  std::vector<Cover> out;
  for (const auto& labels : enumerate(ctx, bound, worker_count(opt))) out.push_back(to_cover(g, labels));
  std::sort(out.begin(), out.end(), [](const Cover& a, const Cover& b) { return a.sets() < b.sets(); });
  return out;
}

}  // namespace splitclust
