#include <algorithm>

#include "search_util.hpp"
#include "splitclust/solvers.hpp"

namespace splitclust {

namespace {

using namespace detail;

struct Indexed {
  std::size_t x, y, z;
};

class PackingSearch {
 public:
  PackingSearch(std::size_t n, std::vector<std::vector<Indexed>> by_center, std::size_t floor)
      : used_(n, 0), by_center_(std::move(by_center)), best_size_(floor) {}

  void run() { dfs(0); }
  const std::vector<Indexed>& best() const { return best_; }

 private:
  bool fits(const Indexed& t) const {
    return !(used_[t.x] & (bit(t.y) | bit(t.z))) && !(used_[t.y] & bit(t.z));
  }
  void mark(const Indexed& t, bool on) {
    auto flip = [&](std::size_t a, std::size_t b) {
      if (on) {
        used_[a] |= bit(b);
        used_[b] |= bit(a);
      } else {
        used_[a] &= ~bit(b);
        used_[b] &= ~bit(a);
      }
    };
    flip(t.x, t.y);
    flip(t.y, t.z);
    flip(t.x, t.z);
  }

  std::size_t upper(std::size_t ci) const {
    std::size_t ub = 0;
    for (std::size_t c = ci; c < by_center_.size(); ++c) {
      ub += std::any_of(by_center_[c].begin(), by_center_[c].end(), [&](const Indexed& t) { return fits(t); }) ? 1 : 0;
    }
    return ub;
  }

  void dfs(std::size_t ci) {
    if (chosen_.size() + upper(ci) <= best_size_) return;
    if (ci == by_center_.size()) {
      best_size_ = chosen_.size();
      best_ = chosen_;
      return;
    }
    for (const auto& t : by_center_[ci]) {
      if (!fits(t)) continue;
      mark(t, true);
      chosen_.push_back(t);
      dfs(ci + 1);
      chosen_.pop_back();
      mark(t, false);
    }
    dfs(ci + 1);
  }

  std::vector<Mask> used_;
  std::vector<std::vector<Indexed>> by_center_;
  std::vector<Indexed> chosen_;
  std::vector<Indexed> best_;
  std::size_t best_size_;
};

}  // namespace

P3Packing max_p3_packing(const Graph& g, bool exact, const SolverOptions& opt) {
  const auto all = enumerate_induced_p3(g);
  P3Packing greedy;
  for (const auto& t : all) {
    if (std::all_of(greedy.triples.begin(), greedy.triples.end(),
                    [&](const P3& s) { return modification_disjoint(s, t); })) {
      greedy.triples.push_back(t);
    }
  }
  if (!exact) return greedy;
  check_limit(g, opt.packing_limit, opt, "exact packing");

  std::vector<std::vector<Indexed>> by_center(g.order());
  for (const auto& t : all) {
    by_center[g.index_of(t.center)].push_back({g.index_of(t.x), g.index_of(t.center), g.index_of(t.z)});
  }
  std::erase_if(by_center, [](const auto& v) { return v.empty(); });
  PackingSearch s(g.order(), std::move(by_center), greedy.size());
  s.run();
  if (s.best().size() <= greedy.size()) return greedy;
  P3Packing out;
  for (const auto& t : s.best()) out.triples.push_back(P3{g.vertex(t.x), g.vertex(t.y), g.vertex(t.z)});
  std::sort(out.triples.begin(), out.triples.end());
  return out;
}

}  // namespace splitclust
