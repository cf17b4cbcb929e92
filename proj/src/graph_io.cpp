#include "splitclust/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "splitclust/error.hpp"

namespace splitclust {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + msg);
}

std::size_t parse_count(const std::string& tok, std::size_t line) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
    fail(line, "expected a non-negative integer, got '" + tok + "'");
  }
  return std::stoul(tok);
}

VertexId parse_id(const std::string& tok, std::size_t line) {
  try {
    return VertexId::parse(tok);
  } catch (const Error& e) {
    fail(line, e.what());
  }
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  bool header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  VertexSet vertices;
  std::vector<Edge> edges;

  while (std::getline(in, raw)) {
    ++lineno;
    std::istringstream ls(raw);
    std::string kw;
    if (!(ls >> kw) || kw[0] == '#') continue;
    std::vector<std::string> args;
    for (std::string t; ls >> t;) args.push_back(t);

    if (!header) {
      if (kw != "graph" || args.size() != 2) fail(lineno, "expected 'graph <n> <m>'");
      n = parse_count(args[0], lineno);
      m = parse_count(args[1], lineno);
      header = true;
    } else if (kw == "v") {
      if (args.size() != 1) fail(lineno, "expected 'v <id>'");
      if (!edges.empty()) fail(lineno, "vertex declared after edges");
      vertices.push_back(parse_id(args[0], lineno));
    } else if (kw == "e") {
      if (args.size() != 2) fail(lineno, "expected 'e <id> <id>'");
      edges.push_back(Edge{parse_id(args[0], lineno), parse_id(args[1], lineno)});
    } else {
      fail(lineno, "unknown record '" + kw + "'");
    }
  }
  if (!header) throw Error(ErrorKind::ParseError, "missing 'graph <n> <m>' header");
  if (vertices.size() != n) {
    throw Error(ErrorKind::ParseError, "header declares " + std::to_string(n) + " vertices, found " +
                                           std::to_string(vertices.size()));
  }
  if (edges.size() != m) {
    throw Error(ErrorKind::ParseError, "header declares " + std::to_string(m) + " edges, found " +
                                           std::to_string(edges.size()));
  }
  try {
    return Graph(std::move(vertices), edges);
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

Graph read_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "graph " << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& v : g.vertices()) out << "v " << v << '\n';
  for (const auto& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  return out.str();
}

void write_graph(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write '" + path.string() + "'");
  out << format_graph(g);
}

}  // namespace splitclust
