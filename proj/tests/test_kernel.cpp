#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "splitclust/error.hpp"
#include "splitclust/hunter.hpp"
#include "splitclust/kernel.hpp"

using namespace splitclust;
using testutil::letters;

namespace {

// Smallest vertex with a closed twin whose closed neighborhood is a clique.
std::optional<VertexId> brute_rule1(const Graph& g) {
  const oracle::Adj a(g);
  for (std::size_t v = 0; v < a.n; ++v) {
    bool twin = false;
    for (std::size_t w = 0; w < a.n && !twin; ++w) {
      if (w == v || !a(v, w)) continue;
      bool same = true;
      for (std::size_t x = 0; x < a.n; ++x) {
        if (x != v && x != w && a(v, x) != a(w, x)) same = false;
      }
      twin = same;
    }
    if (!twin) continue;
    bool clique = true;
    for (std::size_t x = 0; x < a.n; ++x) {
      for (std::size_t y = x + 1; y < a.n; ++y) {
        if (a(v, x) && a(v, y) && !a(x, y)) clique = false;
      }
    }
    if (clique) return g.vertex(v);
  }
  return std::nullopt;
}

}  // namespace

TEST_SUITE("kernel") {

TEST_CASE("rule I eligibility") {
  CHECK(rule1_applicable(testutil::k3()) == VertexId("a"));
  CHECK_FALSE(rule1_applicable(testutil::p3()));
  CHECK(rule1_applicable(testutil::ccl8()) == brute_rule1(testutil::ccl8()));
  CHECK_THROWS_AS((void)rule1_applicable(letters("abc", "ab")), Error);
}

TEST_CASE("rule I eligibility matches brute force on small graphs") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& g : enumerate_graphs(n, false)) {
      if (!isolated_vertices(g).empty()) continue;
      CHECK(rule1_applicable(g) == brute_rule1(g));
    }
  }
}

TEST_CASE("applying rule I") {
  CHECK(apply_rule1(letters("ab", "ab"), "a").empty());
  const Graph k2 = apply_rule1(testutil::k3(), "a");
  CHECK(k2 == letters("bc", "bc"));
  CHECK(apply_rule1(k2, "b").empty());
  try {
    (void)apply_rule1(testutil::p3(), "b");
    FAIL("expected NotApplicable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotApplicable);
  }
}

TEST_CASE("a K2 component cascades") {
  // P3 + K2: deleting a K2 vertex isolates its twin, so plain deletion at
  // budget |V| - 1 + k would turn a NO into a YES.
  const Graph g = letters("abcde", "ab bc de");
  CHECK(oracle::scc_min(oracle::Adj(g)) == 6);
  CHECK(oracle::scc_min(oracle::Adj(remove_vertices(g, {"d"}))) == 4);
  CHECK(rule1_applicable(g) == VertexId("d"));
  const Graph ruled = apply_rule1(g, "d");
  CHECK(ruled == testutil::p3());
  CHECK(oracle::scc_min(oracle::Adj(ruled)) > ruled.order());
}

TEST_CASE("kernelize examples") {
  auto [k3, t1] = kernelize(Instance{Problem::CVS, testutil::k3(), 0});
  CHECK(k3.graph.empty());
  CHECK(k3.budget == 0);
  CHECK_FALSE(t1.proven_negative());
  CHECK(std::count_if(t1.steps.begin(), t1.steps.end(),
                      [](const KernelStep& s) { return s.kind == KernelStep::Kind::RuleI; }) == 2);

  auto [p0, t2] = kernelize(Instance{Problem::CVS, testutil::p3(), 0});
  CHECK(t2.proven_negative());
  CHECK(p0.graph == canonical_negative_graph());
  CHECK(p0.budget == 0);

  auto [p1, t3] = kernelize(Instance{Problem::CVS, testutil::p3(), 1});
  CHECK_FALSE(t3.proven_negative());
  CHECK(p1 == Instance{Problem::CVS, testutil::p3(), 1});
}

TEST_CASE("isolates are removed first") {
  const Graph g = read_graph(testutil::fixtures() / "k1p3.graph");
  auto [out, t] = kernelize(Instance{Problem::CVS, g, 1});
  REQUIRE_FALSE(t.steps.empty());
  CHECK(t.steps.front().kind == KernelStep::Kind::IsolateRemoval);
  CHECK(t.steps.front().vertices == VertexSet{"d"});
  CHECK(out.graph == testutil::p3());
}

TEST_CASE("traces replay and serialize") {
  for (Budget k = 0; k <= 3; ++k) {
    const Instance in{Problem::CVS, testutil::ccl8(), k};
    auto [out, t] = kernelize(in);
    CHECK(replay(t) == out);
    const auto back = kernel_trace_from_json(to_json(t));
    CHECK(back.steps == t.steps);
    CHECK(back.input == t.input);
    CHECK(back.output == t.output);
    CHECK(out.graph.order() <= 3 * k + 3);
  }
  CHECK(canonical_negative_graph().order() == 3);
  CHECK(canonical_negative_graph().edge_count() == 2);
}

TEST_CASE("rule II appears at most once, last") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& g : enumerate_graphs(n, false)) {
      for (Budget k = 0; k <= 2; ++k) {
        auto [out, t] = kernelize(Instance{Problem::CVS, g, k});
        const auto rule2 = std::count_if(t.steps.begin(), t.steps.end(),
                                         [](const KernelStep& s) { return s.kind == KernelStep::Kind::RuleII; });
        CHECK(rule2 <= 1);
        if (rule2 == 1) CHECK(t.steps.back().kind == KernelStep::Kind::RuleII);
        CHECK(replay(t) == out);
      }
    }
  }
}

}  // TEST_SUITE
