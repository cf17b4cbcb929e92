// splitclust: solve, kernelize, reduce, verify, lowerbound, hunt.
//
// Exit codes: 0 yes / valid / done, 1 no / invalid, 2 usage or input error,
// 3 size limit exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "splitclust/certificate_io.hpp"
#include "splitclust/error.hpp"
#include "splitclust/graph_io.hpp"
#include "splitclust/hunter.hpp"
#include "splitclust/kernel.hpp"
#include "splitclust/reductions.hpp"
#include "splitclust/solvers.hpp"

using namespace splitclust;

namespace {

enum Exit { kYes = 0, kNo = 1, kUsage = 2, kLimit = 3 };

struct Common {
  bool json = false;
  bool override_limit = false;
  bool parallel = false;
  bool exact_packing = false;

  SolverOptions solver() const {
    auto opt = SolverOptions::from_env();
    opt.override_limit = override_limit;
    opt.parallel = parallel;
    opt.exact_packing = exact_packing;
    return opt;
  }
};

Problem problem_arg(const std::string& s) {
  if (auto p = parse_problem(s)) return *p;
  throw CLI::ValidationError("problem", "expected ncc, scc, cvs or cevs, got '" + s + "'");
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write '" + path + "'");
  out << text;
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
}

void print_metrics(const VerifyReport& r) {
  for (const auto& [k, v] : r.metrics) std::cout << k << '=' << v << '\n';
}

Json report_json(const VerifyReport& r) {
  Json j;
  j["valid"] = r.valid;
  j["reason"] = r.reason;
  Json m = Json::object();
  for (const auto& [k, v] : r.metrics) m[k] = v;
  j["metrics"] = std::move(m);
  if (!r.valency.empty()) {
    Json val = Json::object();
    for (const auto& [v, n] : r.valency) val[v.str()] = n;
    j["valency"] = std::move(val);
  }
  return j;
}

// ---- solve ----

struct SolveArgs {
  std::string problem, graph, out;
  Budget budget = 0;
  bool sequence = false;
};

int cmd_solve(const SolveArgs& a, const Common& c) {
  const auto problem = problem_arg(a.problem);
  const auto g = read_graph(a.graph);
  const auto opt = c.solver();
  std::optional<Certificate> cert;
  Json extra = Json::object();
  std::string note;

  switch (problem) {
    case Problem::SCC:
      if (auto r = solve_scc_exact(g, a.budget, opt)) {
        extra["weight"] = r->weight();
        cert = Certificate{problem, a.budget, r->sets()};
      }
      break;
    case Problem::NCC:
      if (auto r = solve_ncc_exact(g, a.budget, opt)) {
        extra["size"] = r->size();
        cert = Certificate{problem, a.budget, r->sets()};
      }
      break;
    case Problem::CVS: {
      const Instance inst{problem, g, a.budget};
      if (kernelize(inst).second.proven_negative()) {
        note = "kernel Rule II: more than 3k vertices remain";
        break;
      }
      if (auto r = solve_cvs_exact(inst, opt)) {
        extra["splits"] = r->size();
        cert = Certificate{problem, a.budget, as_modifications(*r)};
      }
      break;
    }
    case Problem::CEVS: {
      const auto bound = max_p3_packing(g, false, opt).size();
      if (bound > a.budget) {
        note = "P3 packing of size " + std::to_string(bound) + " exceeds the budget";
        extra["lower_bound"] = bound;
        break;
      }
      if (auto r = solve_cevs_exact(Instance{problem, g, a.budget}, opt)) {
        extra["cost"] = r->sequence.length();
        if (a.sequence) {
          cert = Certificate{problem, a.budget, r->sequence};
        } else {
          cert = Certificate{problem, a.budget, r->cover.sets()};
        }
      }
      break;
    }
  }

  if (cert && !a.out.empty()) write_certificate(*cert, a.out);
  if (c.json) {
    Json j;
    j["problem"] = std::string(to_string(problem));
    j["budget"] = a.budget;
    j["answer"] = cert ? "yes" : "no";
    for (auto& [k, v] : extra.items()) j[k] = v;
    if (!note.empty()) j["note"] = note;
    if (cert) j["certificate"] = Json::parse(format_certificate(*cert));
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << (cert ? "YES" : "NO");
    for (auto& [k, v] : extra.items()) std::cout << ' ' << k << '=' << v.dump();
    if (!note.empty()) std::cout << " (" << note << ')';
    std::cout << '\n';
    if (cert && a.out.empty()) std::cout << format_certificate(*cert);
  }
  return cert ? kYes : kNo;
}

// ---- kernelize ----

struct KernelArgs {
  std::string graph, out, trace;
  Budget budget = 0;
};

int cmd_kernelize(const KernelArgs& a, const Common& c) {
  const auto g = read_graph(a.graph);
  auto [out, trace] = kernelize(Instance{Problem::CVS, g, a.budget});
  if (!a.trace.empty()) write_text(a.trace, to_json(trace).dump(2) + "\n");
  if (!a.out.empty()) write_graph(out.graph, a.out);
  std::size_t rule1 = 0;
  for (const auto& s : trace.steps) rule1 += s.kind == KernelStep::Kind::RuleI ? 1 : 0;
  if (c.json) {
    Json j;
    j["budget"] = out.budget;
    j["vertices"] = out.graph.order();
    j["edges"] = out.graph.edge_count();
    j["rule1_steps"] = rule1;
    j["negative"] = trace.proven_negative();
    if (a.trace.empty()) j["trace"] = to_json(trace);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "budget=" << out.budget << " vertices=" << out.graph.order() << " edges=" << out.graph.edge_count()
              << " rule1_steps=" << rule1 << (trace.proven_negative() ? " negative (Rule II)" : "") << '\n';
    if (a.out.empty()) std::cout << format_graph(out.graph);
  }
  return kYes;
}

// ---- reduce ----

struct ReduceArgs {
  std::string from, to, graph, out, trace;
  Budget budget = 0;
};

int cmd_reduce(const ReduceArgs& a, const Common& c) {
  const auto from = problem_arg(a.from);
  const auto to = problem_arg(a.to);
  std::optional<ReductionKind> kind;
  for (auto k : {ReductionKind::NccToScc, ReductionKind::CvsToScc, ReductionKind::SccToCvs, ReductionKind::CvsToCevs}) {
    if (to_string(k) == std::string(to_string(from)) + "->" + std::string(to_string(to))) kind = k;
  }
  if (!kind) {
    throw CLI::ValidationError("--to", "no reduction from " + a.from + " to " + a.to +
                                           " (supported: ncc->scc, cvs->scc, scc->cvs, cvs->cevs)");
  }
  const auto g = read_graph(a.graph);
  Instance inst{from, g, a.budget};
  std::pair<Instance, ReductionTrace> r;
  try {
    r = reduce(inst, *kind);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BudgetUnderflow) throw;
    if (c.json) {
      std::cout << Json{{"answer", "no"}, {"reason", e.what()}}.dump(2) << '\n';
    } else {
      std::cout << "NO: " << e.what() << '\n';
    }
    return kNo;
  }
  if (!a.trace.empty()) write_text(a.trace, to_json(r.second).dump(2) + "\n");
  if (!a.out.empty()) write_graph(r.first.graph, a.out);
  if (c.json) {
    Json j;
    j["problem"] = std::string(to_string(r.first.problem));
    j["budget"] = r.first.budget;
    j["vertices"] = r.first.graph.order();
    j["edges"] = r.first.graph.edge_count();
    Json params = Json::object();
    for (const auto& [k, v] : r.second.parameters) params[k] = v;
    j["parameters"] = std::move(params);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << to_string(r.first.problem) << " budget=" << r.first.budget << " vertices=" << r.first.graph.order()
              << " edges=" << r.first.graph.edge_count();
    for (const auto& [k, v] : r.second.parameters) std::cout << ' ' << k << '=' << v;
    std::cout << '\n';
    if (a.out.empty()) std::cout << format_graph(r.first.graph);
  }
  return kYes;
}

// ---- verify ----

struct VerifyArgs {
  std::string problem, graph, cert;
  std::optional<Budget> budget;
};

int cmd_verify(const VerifyArgs& a, const Common& c) {
  const auto problem = problem_arg(a.problem);
  const auto g = read_graph(a.graph);
  const auto cert = read_certificate(a.cert);
  if (cert.problem != problem) {
    throw Error(ErrorKind::WrongProblem, "certificate is for " + std::string(to_string(cert.problem)));
  }
  const Budget budget = a.budget.value_or(cert.budget);
  VerifyReport r;
  try {
    switch (cert.kind()) {
      case CertificateKind::Cover: {
        const auto& f = std::get<Family>(cert.payload);
        if (problem == Problem::SCC) {
          r = verify_sigma_cover(g, SigmaCliqueCover(f), budget);
        } else if (problem == Problem::NCC) {
          r = verify_node_cover(g, NodeCliqueCover(f), budget);
        } else if (problem == Problem::CEVS) {
          r = verify_cover(g, Cover(f), budget);
        } else {
          throw Error(ErrorKind::WrongProblem, "cvs certificates are split sequences");
        }
        break;
      }
      case CertificateKind::Sequence:
        if (problem != Problem::CVS && problem != Problem::CEVS) {
          throw Error(ErrorKind::WrongProblem, "sequences certify cvs or cevs");
        }
        r = verify_modification_sequence(g, std::get<ModificationSequence>(cert.payload), budget, problem);
        break;
      case CertificateKind::Packing:
        if (problem != Problem::CEVS) throw Error(ErrorKind::WrongProblem, "packings bound cevs");
        r = verify_p3_packing(g, std::get<P3Packing>(cert.payload));
        if (r.valid && r.metrics["lower_bound"] < static_cast<std::int64_t>(budget)) {
          r.valid = false;
          r.reason = "packing certifies only " + std::to_string(r.metrics["lower_bound"]) + ", claimed " +
                     std::to_string(budget);
        }
        break;
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::WrongProblem) throw;
    r.valid = false;
    r.reason = e.what();
  }
  if (c.json) {
    std::cout << report_json(r).dump(2) << '\n';
  } else {
    std::cout << (r.valid ? "valid" : "invalid: " + r.reason) << '\n';
    print_metrics(r);
  }
  return r.valid ? kYes : kNo;
}

// ---- lowerbound ----

struct LowerArgs {
  std::string graph, packing, out;
  bool exact = false;
};

int cmd_lowerbound(const LowerArgs& a, const Common& c) {
  const auto g = read_graph(a.graph);
  P3Packing p;
  std::string source;
  if (!a.packing.empty()) {
    const auto cert = read_certificate(a.packing);
    if (cert.kind() != CertificateKind::Packing) throw Error(ErrorKind::InvalidCertificate, "not a packing certificate");
    p = std::get<P3Packing>(cert.payload);
    source = "given";
  } else {
    p = max_p3_packing(g, a.exact, c.solver());
    source = a.exact ? "exact" : "greedy";
  }
  const auto r = verify_p3_packing(g, p);
  if (!a.out.empty()) write_certificate(Certificate{Problem::CEVS, p.size(), p}, a.out);
  if (c.json) {
    auto j = report_json(r);
    j["source"] = source;
    j["packing"] = to_json(p);
    std::cout << j.dump(2) << '\n';
  } else if (r.valid) {
    std::cout << "lower_bound=" << p.size() << " (" << source << " packing)\n";
    for (const auto& t : p.triples) std::cout << "  " << t.x << ' ' << t.center << ' ' << t.z << '\n';
  } else {
    std::cout << "invalid packing: " << r.reason << '\n';
  }
  return r.valid ? kYes : kNo;
}

// ---- hunt ----

struct HuntArgs {
  std::size_t max_n = 5;
  bool connected = false;
  std::string resume, graph, out;
};

std::optional<std::pair<std::size_t, std::size_t>> last_position(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::optional<std::pair<std::size_t, std::size_t>> last;
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) continue;
    try {
      const auto j = Json::parse(line);
      std::pair<std::size_t, std::size_t> pos{j.at("n").get<std::size_t>(), j.at("index").get<std::size_t>()};
      if (!last || pos > *last) last = pos;
    } catch (const std::exception&) {
      break;  // a torn final line from an interrupted run
    }
  }
  return last;
}

int cmd_hunt(const HuntArgs& a, const Common& c) {
  auto opt = c.solver();
  if (!a.graph.empty()) {
    const auto r = hunt_graph(read_graph(a.graph), opt);
    std::cout << to_json(r).dump() << '\n';
    if (!c.json) {
      std::cerr << "optimum=" << r.optimum << " optimal_covers=" << r.optimal_covers
                << " existsOptimumCutting=" << (r.exists_optimum_cutting ? "true" : "false")
                << " existsOptimumRespecting=" << (r.exists_optimum_respecting ? "true" : "false") << '\n';
    }
    return kYes;
  }
  HuntOptions h;
  h.max_n = a.max_n;
  h.connected_only = a.connected;
  h.solver = opt;
  std::string out_path = a.out;
  if (!a.resume.empty()) {
    h.resume_after = last_position(a.resume);
    if (out_path.empty()) out_path = a.resume;
  }
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, a.resume == out_path ? std::ios::app : std::ios::trunc);
    if (!file) throw Error(ErrorKind::ParseError, "cannot write '" + out_path + "'");
  }
  std::ostream& sink = out_path.empty() ? std::cout : file;
  const auto summary = hunt(h, [&](const HuntReport& r) { sink << to_json(r).dump() << '\n' << std::flush; });
  if (c.json) {
    Json j = Json::object();
    for (const auto& [n, t] : summary.by_n) {
      j[std::to_string(n)] = Json{{"graphs", t.graphs}, {"cutting", t.cutting}, {"notRespecting", t.not_respecting}};
    }
    std::cout << Json{{"summary", j}}.dump() << '\n';
  } else {
    std::cout << format_summary(summary);
  }
  return kYes;
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::SizeLimitExceeded: return kLimit;
    case ErrorKind::BudgetUnderflow: return kNo;
    default: return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Overlapping cluster editing toolkit: exact solvers, reductions, kernel and certificates"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub, bool solver_flags) {
    sub->add_flag("--json", common.json, "Machine-readable output");
    if (solver_flags) {
      sub->add_flag("--size-limit-override", common.override_limit, "Ignore the soft size limits");
      sub->add_flag("--parallel", common.parallel, "Use all hardware threads");
    }
  };

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Decide an instance and emit a certificate");
  s->add_option("problem", solve.problem, "ncc, scc, cvs or cevs")->required();
  s->add_option("graph", solve.graph, "Graph file")->required()->check(CLI::ExistingFile);
  s->add_option("--budget,-k", solve.budget, "Budget")->required();
  s->add_option("-o,--out", solve.out, "Certificate output file");
  s->add_flag("--sequence", solve.sequence, "cevs: emit the edit script instead of the cover");
  s->add_flag("--exact-packing", common.exact_packing, "cevs: exact packing bound at the root");
  add_common(s, true);

  KernelArgs kern;
  auto* k = app.add_subcommand("kernelize", "Apply Rules I and II to a CVS instance");
  k->add_option("graph", kern.graph, "Graph file")->required()->check(CLI::ExistingFile);
  k->add_option("--budget,-k", kern.budget, "Number of splits")->required();
  k->add_option("-o,--out", kern.out, "Reduced graph output file");
  k->add_option("--trace", kern.trace, "Trace output file (JSON)");
  add_common(k, false);

  ReduceArgs red;
  auto* r = app.add_subcommand("reduce", "Translate an instance between problems");
  r->add_option("--from", red.from, "Source problem")->required();
  r->add_option("--to", red.to, "Target problem")->required();
  r->add_option("graph", red.graph, "Graph file")->required()->check(CLI::ExistingFile);
  r->add_option("--budget,-k", red.budget, "Source budget")->required();
  r->add_option("-o,--out", red.out, "Reduced graph output file");
  r->add_option("--trace", red.trace, "Trace output file (JSON)");
  add_common(r, false);

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Check a certificate");
  v->add_option("--problem", ver.problem, "ncc, scc, cvs or cevs")->required();
  v->add_option("graph", ver.graph, "Graph file")->required()->check(CLI::ExistingFile);
  v->add_option("certificate", ver.cert, "Certificate file")->required()->check(CLI::ExistingFile);
  v->add_option("--budget,-k", ver.budget, "Budget (default: the certificate's)");
  add_common(v, false);

  LowerArgs low;
  auto* l = app.add_subcommand("lowerbound", "P3-packing lower bound on the CEVS cost");
  l->add_option("graph", low.graph, "Graph file")->required()->check(CLI::ExistingFile);
  l->add_flag("--exact", low.exact, "Maximum packing instead of first-fit");
  l->add_option("--packing", low.packing, "Use and check this packing certificate")->check(CLI::ExistingFile);
  l->add_option("-o,--out", low.out, "Write the packing certificate");
  add_common(l, true);

  HuntArgs hun;
  auto* h = app.add_subcommand("hunt", "Search small graphs for critical-clique counterexamples");
  h->add_option("--max-n", hun.max_n, "Largest order")->check(CLI::Range(1, 9));
  h->add_flag("--connected", hun.connected, "Connected graphs only");
  h->add_option("--resume", hun.resume, "Continue after the last report in this file")->check(CLI::ExistingFile);
  h->add_option("--graph", hun.graph, "Hunt a single graph")->check(CLI::ExistingFile);
  h->add_option("--out", hun.out, "Report file (JSON lines)");
  add_common(h, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsage;
  }

  try {
    if (*s) return cmd_solve(solve, common);
    if (*k) return cmd_kernelize(kern, common);
    if (*r) return cmd_reduce(red, common);
    if (*v) return cmd_verify(ver, common);
    if (*l) return cmd_lowerbound(low, common);
    if (*h) return cmd_hunt(hun, common);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
