// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance <path-to-cli> <fixtures-dir> [criterion...]

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "oracles.hpp"
#include "process.hpp"
#include "splitclust/certificate_io.hpp"
#include "splitclust/critical_clique.hpp"
#include "splitclust/graph_io.hpp"
#include "splitclust/hunter.hpp"
#include "splitclust/json.hpp"
#include "splitclust/kernel.hpp"
#include "splitclust/reductions.hpp"
#include "splitclust/solvers.hpp"

using namespace splitclust;
namespace fs = std::filesystem;
using testutil::quote;
using testutil::run;

namespace {

std::string g_cli;
fs::path g_fixtures;

// Collects failures; a criterion passes when none were recorded.
struct Check {
  std::vector<std::string> failures;
  std::size_t checks = 0;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures.size() < 20) failures.push_back(what);
    if (!ok && failures.size() == 20) failures.push_back("...");
  }
};

std::vector<Graph> classes_upto(std::size_t n) {
  std::vector<Graph> out;
  for (std::size_t i = 1; i <= n; ++i) {
    for (auto& g : enumerate_graphs(i, false)) out.push_back(std::move(g));
  }
  return out;
}

std::string show(const Graph& g) {
  std::ostringstream s;
  s << g.order() << ":";
  for (const auto& e : g.edges()) s << ' ' << e.u << e.v;
  return s.str();
}

std::string cli_cmd(const std::string& args) { return quote(g_cli) + " " + args; }
std::string fixture(const char* name) { return quote((g_fixtures / name).string()); }

SolverOptions unlimited() {
  SolverOptions o;
  o.override_limit = true;
  return o;
}

// ---- 1: the eight-vertex graph ----
void criterion1(Check& c) {
  const Graph g = read_graph(g_fixtures / "ccl8.graph");

  auto r = run(cli_cmd("lowerbound " + fixture("ccl8.graph") + " --packing " + fixture("ccl8-packing.json")));
  c.expect(r.status == 0 && r.out.find("lower_bound=6") != std::string::npos, "lowerbound with the shipped packing");
  const auto pack = read_certificate(g_fixtures / "ccl8-packing.json");
  const auto& triples = std::get<P3Packing>(pack.payload);
  const std::set<P3> want{P3{"a", "b", "c"}, P3{"c", "d", "e"}, P3{"a", "h", "g"},
                          P3{"e", "f", "g"}, P3{"f", "c", "h"}, P3{"b", "g", "d"}};
  c.expect(std::set<P3>(triples.triples.begin(), triples.triples.end()) == want, "packing is abc cde ahg gfe hcf bgd");
  r = run(cli_cmd("lowerbound --exact " + fixture("ccl8.graph")));
  c.expect(r.status == 0 && r.out.find("lower_bound=6") != std::string::npos, "exact lowerbound is 6");

  r = run(cli_cmd("verify --problem cevs " + fixture("ccl8.graph") + " " + fixture("ccl8-cutting-cover.json") +
                  " --budget 6"));
  c.expect(r.status == 0 && r.out.find("total=6") != std::string::npos, "verify accepts the cutting cover at 6");

  c.expect(run(cli_cmd("solve cevs " + fixture("ccl8.graph") + " --budget 5")).status == 1, "budget 5 is NO");
  c.expect(run(cli_cmd("solve cevs " + fixture("ccl8.graph") + " --budget 6")).status == 0, "budget 6 is YES");

  const Cover cut(std::get<Family>(read_certificate(g_fixtures / "ccl8-cutting-cover.json").payload));
  c.expect(cover_cost(g, cut).total() == 6, "cutting cover costs 6");
  c.expect(!cover_respects_critical_cliques(g, cut), "cutting cover cuts a critical clique");
  bool some_respecting = false;
  for (const char* name : {"respecting-merge.json", "respecting-cut-edges.json", "respecting-four-sets.json"}) {
    const Cover cov(std::get<Family>(read_certificate(g_fixtures / name).payload));
    const bool ok = cover_cost(g, cov).total() == 6 && cover_respects_critical_cliques(g, cov);
    c.expect(ok, std::string("respecting fixture ") + name);
    some_respecting |= ok;
  }
  c.expect(some_respecting, "a cost-6 cover respects the critical cliques");
}

// ---- 2: CVS vs SCC at |V| - |I| + k ----
void criterion2(Check& c) {
  for (const auto& g : classes_upto(6)) {
    const auto base = g.order() - isolated_vertices(g).size();
    for (Budget k = 0; k <= 3; ++k) {
      const auto cvs = solve_cvs_exact(Instance{Problem::CVS, g, k});
      const auto scc = solve_scc_exact(g, base + k);
      c.expect(cvs.has_value() == scc.has_value(), "disagreement on " + show(g) + " k=" + std::to_string(k));
      if (cvs) {
        c.expect(verify_modification_sequence(g, as_modifications(*cvs), k, Problem::CVS).valid,
                 "cvs certificate " + show(g));
      }
      if (scc) c.expect(verify_sigma_cover(g, *scc, base + k).valid, "scc certificate " + show(g));
    }
  }
}

// ---- 3: NCC vs SCC on the universal extension ----
void criterion3(Check& c) {
  const auto opt = unlimited();
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& g : oracle::all_labelled(n)) {
      const auto ncc_opt = oracle::ncc_min(oracle::Adj(g));
      for (Budget s = 0; s <= 4; ++s) {
        const Instance ncc{Problem::NCC, g, s};
        const auto [scc, trace] = reduce_ncc_to_scc(ncc);
        const auto ell = 2 * g.edge_count() + 1;
        c.expect(trace.parameters.at("ell") == ell && scc.budget == ell * (g.order() + s + 1) - 1,
                 "parameters " + show(g));
        const bool ncc_yes = ncc_opt <= s;
        const auto ncc_cert = solve_ncc_exact(g, s);
        c.expect(ncc_cert.has_value() == ncc_yes, "ncc solver vs oracle " + show(g));
        const auto scc_cert = solve_scc_exact(scc.graph, scc.budget, opt);
        const std::string where = show(g) + " s=" + std::to_string(s);
        c.expect(scc_cert.has_value() == ncc_yes, "disagreement on " + where);
        if (ncc_cert) {
          const auto fwd = translate_ncc_cert_to_scc(ncc, *ncc_cert);
          c.expect(verify_sigma_cover(scc.graph, fwd, scc.budget).valid, "forward translation " + where);
          c.expect(fwd.weight() <= ell * (g.order() + ncc_cert->size() + 1) - 1, "forward weight " + where);
          const auto back = translate_scc_cert_to_ncc(ncc, fwd);
          c.expect(verify_node_cover(g, back, s).valid, "round trip " + where);
        }
        if (scc_cert) {
          const auto back = translate_scc_cert_to_ncc(ncc, *scc_cert);
          c.expect(verify_node_cover(g, back, s).valid && back.size() <= s, "backward translation " + where);
        }
      }
    }
  }
}

// ---- 4: kernel ----
void criterion4(Check& c) {
  for (const auto& g : classes_upto(8)) {
    for (Budget k = 0; k <= 4; ++k) {
      const Instance in{Problem::CVS, g, k};
      const auto [out, trace] = kernelize(in);
      const std::string where = show(g) + " k=" + std::to_string(k);
      c.expect(out.graph.order() <= 3 * k + 3, "kernel size " + where);
      c.expect(out.budget <= k, "kernel budget " + where);
      const bool before = solve_cvs_exact(in).has_value();
      const bool after = solve_cvs_exact(out).has_value();
      c.expect(before == after, "kernel changed the answer on " + where);
      if (trace.proven_negative()) c.expect(!before, "rule II on a positive instance " + where);
    }
  }

  // Rule I in isolation, for every eligible vertex. Plain deletion is
  // compared only while G - v stays isolate-free (not a K2 component).
  std::size_t k2_cases = 0;
  for (const auto& g : classes_upto(6)) {
    if (!isolated_vertices(g).empty()) continue;
    const auto cc = critical_clique_graph(g);
    const auto opt_g = oracle::scc_min(oracle::Adj(g));
    for (std::size_t i = 0; i < g.order(); ++i) {
      const auto cls = cc.class_of[i];
      if (cc.classes[cls].size() < 2 || !cc.reducible[cls]) continue;
      const auto& v = g.vertex(i);
      const Graph minus = remove_vertices(g, {v});
      const Graph ruled = apply_rule1(g, v);
      const auto opt_minus = oracle::scc_min(oracle::Adj(minus));
      const auto opt_ruled = ruled.empty() ? 0 : oracle::scc_min(oracle::Adj(ruled));
      const bool cascade = isolated_vertices(minus).size() > 0;
      const bool k2_component = cc.classes[cls].size() == 2 && g.degree(i) == 1;
      c.expect(cascade == k2_component, "isolates after deleting " + v.str() + " from " + show(g));
      k2_cases += cascade;
      for (std::size_t k = 0; k <= 3; ++k) {
        const std::string where = show(g) + " v=" + v.str() + " k=" + std::to_string(k);
        const bool before = opt_g <= g.order() + k;
        c.expect(before == (opt_ruled <= ruled.order() + k), "rule I on " + where);
        if (!cascade) c.expect(before == (opt_minus <= minus.order() + k), "deletion of " + where);
      }
    }
  }
  c.expect(k2_cases > 0, "no K2-component cases were exercised");

  // Rule II in isolation.
  for (const auto& g : classes_upto(8)) {
    if (!isolated_vertices(g).empty() || rule1_applicable(g)) continue;
    bool clique_component = false;
    for (const auto& comp : connected_components(g)) clique_component |= is_clique(g, comp);
    if (clique_component) continue;
    const auto opt = scc_optimum(g);
    for (std::size_t k = 0; 3 * k < g.order(); ++k) {
      c.expect(opt > g.order() + k, "rule II on " + show(g) + " k=" + std::to_string(k));
    }
  }
}

// ---- 5: covers and edit scripts ----
void criterion5(Check& c) {
  for (const auto& g : classes_upto(5)) {
    const auto opt = cevs_optimum(g);
    std::vector<Cover> covers = enumerate_covers(g, opt + 1);
    std::vector<ModificationSequence> emitted;
    for (Budget k = opt; k <= opt + 2; ++k) {
      if (auto sol = solve_cevs_exact(Instance{Problem::CEVS, g, k})) {
        covers.push_back(sol->cover);
        emitted.push_back(sol->sequence);
      }
    }
    for (const auto& cover : covers) {
      const auto cost = cover_cost(g, cover).total();
      const auto m = cover_to_modifications(g, cover);
      c.expect(m.length() == cost, "length differs from cost on " + show(g));
      emitted.push_back(m);
    }
    for (const auto& m : emitted) {
      const auto r = verify_modification_sequence(g, m, m.length(), Problem::CEVS);
      c.expect(r.valid, "script does not reach a cluster graph on " + show(g));
      const auto back = modifications_to_cover(g, m);
      c.expect(cover_cost(g, back).total() <= m.length(), "recovered cover too expensive on " + show(g));
    }
  }
}

// ---- 6: blow-up ----
void criterion6(Check& c) {
  const auto opt = unlimited();
  for (const auto& g : classes_upto(4)) {
    if (!isolated_vertices(g).empty()) continue;
    for (Budget k = 0; k <= 2; ++k) {
      const Instance cvs{Problem::CVS, g, k};
      const auto [cevs, trace] = reduce_cvs_to_cevs(cvs);
      const std::string where = show(g) + " k=" + std::to_string(k);
      c.expect(cevs.budget == k * (k + 1) && cevs.graph.order() == g.order() * (k + 1), "construction " + where);
      const auto a = solve_cvs_exact(cvs);
      const auto b = solve_cevs_exact(cevs, opt);
      c.expect(a.has_value() == b.has_value(), "disagreement on " + where);
      if (b) c.expect(verify_cover(cevs.graph, b->cover, cevs.budget).valid, "cevs certificate " + where);
    }
  }
}

// ---- 7: hunter ----
void criterion7(Check& c) {
  const auto dir = fs::temp_directory_path() / ("splitclust-accept-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const auto out = dir / "hunt.jsonl";
  const auto start = std::chrono::steady_clock::now();
  const auto r = run(cli_cmd("hunt --max-n 5 --out " + quote(out.string())));
  const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(r.status == 0, "hunt --max-n 5 exit status");
  c.expect(secs < 300, "hunt --max-n 5 took " + std::to_string(secs) + " s");
  std::size_t lines = 0;
  std::ifstream in(out);
  for (std::string line; std::getline(in, line);) {
    const auto j = Json::parse(line);
    c.expect(j.at("existsOptimumRespecting") == true, "no respecting optimum for " + j.at("canonical").get<std::string>());
    ++lines;
  }
  c.expect(lines == 1 + 2 + 4 + 11 + 34, "hunt reported " + std::to_string(lines) + " graphs");
  fs::remove_all(dir);

  const auto direct = run(cli_cmd("hunt --graph " + fixture("ccl8.graph")));
  c.expect(direct.status == 0, "hunt --graph exit status");
  try {
    const auto j = Json::parse(direct.out);
    c.expect(j.at("optimum") == 6, "eight-vertex optimum");
    c.expect(j.at("existsOptimumCutting") == true, "eight-vertex graph has a cutting optimum");
  } catch (const std::exception& e) {
    c.expect(false, std::string("hunt --graph output: ") + e.what());
  }
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<void(Check&)> body;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <cli> <fixtures-dir> [criterion...]\n";
    return 2;
  }
  g_cli = argv[1];
  g_fixtures = argv[2];
  std::set<int> only;
  for (int i = 3; i < argc; ++i) only.insert(std::stoi(argv[i]));

  const std::vector<Criterion> all{
      {1, "eight-vertex graph: bound 6, cover cost 6, NO at 5, YES at 6, cutting vs respecting", 60, criterion1},
      {2, "CVS(G,k) == SCC(G,|V|-|I|+k) on all graphs <= 6 vertices, k <= 3", 600, criterion2},
      {3, "NCC(G,s) == SCC(G^l, l(|V|+s+1)-1) on all graphs <= 4 vertices, s <= 4, translators", 0, criterion3},
      {4, "kernel size, budget and answers on all graphs <= 8 vertices, k <= 4; rules in isolation", 900, criterion4},
      {5, "cover/script translations on all graphs <= 5 vertices", 0, criterion5},
      {6, "CVS(G,k) == CEVS(blow-up, k(k+1)) on isolate-free graphs <= 4 vertices, k <= 2", 0, criterion6},
      {7, "hunt --max-n 5 all respecting, eight-vertex graph cutting", 300, criterion7},
  };

  bool all_ok = true;
  for (const auto& cr : all) {
    if (!only.empty() && !only.count(cr.id)) continue;
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.budget_seconds > 0) c.expect(secs < cr.budget_seconds, "runtime target exceeded");
    const bool ok = c.failures.empty();
    all_ok &= ok;
    std::printf("%s criterion %d: %s [%zu checks, %.1f s]\n", ok ? "PASS" : "FAIL", cr.id, cr.title, c.checks, secs);
    for (const auto& f : c.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
  }
  return all_ok ? 0 : 1;
}
