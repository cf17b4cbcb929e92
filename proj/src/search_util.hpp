#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "splitclust/graph.hpp"
#include "splitclust/solvers.hpp"

namespace splitclust::detail {

using Mask = std::uint64_t;

inline Mask bit(std::size_t i) { return Mask{1} << i; }
/// Bits strictly above position i.
inline Mask above(std::size_t i) { return i >= 63 ? 0 : ~((Mask{2} << i) - 1); }
inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest(Mask m) { return std::countr_zero(m); }

struct MaskGraph {
  std::size_t n = 0;
  std::vector<Mask> adj;

  explicit MaskGraph(const Graph& g) : n(g.order()), adj(g.order(), 0) {
    for (auto [i, j] : g.index_edges()) {
      adj[i] |= bit(j);
      adj[j] |= bit(i);
    }
  }
  Mask all() const { return n == 64 ? ~Mask{0} : bit(n) - 1; }
};

/// Throws SizeLimitExceeded.
void check_limit(const Graph& g, std::size_t limit, const SolverOptions& opt, const char* what);

unsigned worker_count(const SolverOptions& opt);

VertexSet to_set(const Graph& g, Mask m);
Mask to_mask(const Graph& g, const VertexSet& s);

/// Connected components of the vertices carrying at least one edge.
std::vector<Mask> edge_components(const MaskGraph& g);

/// Runs task(i) for i in [0, count) on `workers` threads.
template <class F>
void parallel_for(std::size_t count, unsigned workers, F&& task) {
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) task(i);
    });
  }
  for (auto& t : pool) t.join();
}

/// Atomically lowers `target` to `value`.
inline void atomic_min(std::atomic<std::size_t>& target, std::size_t value) {
  auto cur = target.load();
  while (value < cur && !target.compare_exchange_weak(cur, value)) {
  }
}

}  // namespace splitclust::detail
