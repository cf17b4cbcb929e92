#include "search_util.hpp"

#include <cstdlib>
#include <string>

#include "splitclust/error.hpp"

namespace splitclust {

SolverOptions SolverOptions::from_env() {
  SolverOptions opt;
  if (const char* env = std::getenv("SPLITCLUST_SIZE_LIMIT")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) {
      opt.clique_limit = opt.cover_limit = opt.packing_limit = static_cast<std::size_t>(v);
    }
  }
  return opt;
}

namespace detail {

void check_limit(const Graph& g, std::size_t limit, const SolverOptions& opt, const char* what) {
  if (g.order() > kMaxSearchVertices) {
    throw Error(ErrorKind::SizeLimitExceeded, std::string(what) + ": " + std::to_string(g.order()) +
                                                  " vertices exceed the hard limit of " +
                                                  std::to_string(kMaxSearchVertices));
  }
  if (g.order() > limit && !opt.override_limit) {
    throw Error(ErrorKind::SizeLimitExceeded, std::string(what) + ": " + std::to_string(g.order()) +
                                                  " vertices exceed the soft limit of " + std::to_string(limit));
  }
}

unsigned worker_count(const SolverOptions& opt) {
  if (!opt.parallel) return 1;
  if (opt.threads > 0) return opt.threads;
  return std::max(1U, std::thread::hardware_concurrency());
}

VertexSet to_set(const Graph& g, Mask m) {
  VertexSet out;
  for (; m; m &= m - 1) out.push_back(g.vertex(static_cast<std::size_t>(lowest(m))));
  return out;
}

Mask to_mask(const Graph& g, const VertexSet& s) {
  Mask m = 0;
  for (const auto& v : s) m |= bit(g.index_of(v));
  return m;
}

std::vector<Mask> edge_components(const MaskGraph& g) {
  std::vector<Mask> out;
  Mask seen = 0;
  for (std::size_t v = 0; v < g.n; ++v) {
    if ((seen & bit(v)) || g.adj[v] == 0) continue;
    Mask comp = bit(v);
    Mask frontier = bit(v);
    while (frontier) {
      const auto x = static_cast<std::size_t>(lowest(frontier));
      frontier &= frontier - 1;
      const Mask fresh = g.adj[x] & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

}  // namespace detail
}  // namespace splitclust
