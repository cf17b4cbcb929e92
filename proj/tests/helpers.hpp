#pragma once

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "splitclust/certificates.hpp"
#include "splitclust/graph.hpp"
#include "splitclust/graph_io.hpp"

namespace testutil {

inline std::filesystem::path fixtures() { return SPLITCLUST_FIXTURES; }

/// Single-character vertices; `edges` is a space-separated list like "ab bc".
inline splitclust::Graph letters(const std::string& vertices, const std::string& edges) {
  splitclust::VertexSet vs;
  for (char c : vertices) vs.emplace_back(std::string(1, c));
  std::vector<splitclust::Edge> es;
  std::istringstream in(edges);
  for (std::string e; in >> e;) {
    es.push_back(splitclust::make_edge(splitclust::VertexId(std::string(1, e[0])), splitclust::VertexId(std::string(1, e[1]))));
  }
  return splitclust::Graph(vs, es);
}

inline splitclust::Graph ccl8() { return splitclust::read_graph(fixtures() / "ccl8.graph"); }
inline splitclust::Graph p3() { return letters("abc", "ab bc"); }
inline splitclust::Graph k3() { return letters("abc", "ab bc ac"); }

/// Sets written as space-separated letter groups: "abch cdefg".
inline splitclust::Family family(const std::string& text) {
  splitclust::Family f;
  std::istringstream in(text);
  for (std::string s; in >> s;) {
    splitclust::VertexSet set;
    for (char c : s) set.emplace_back(std::string(1, c));
    f.push_back(splitclust::normalized(set));
  }
  return f;
}

inline splitclust::VertexSet vset(const std::string& s) {
  splitclust::VertexSet set;
  for (char c : s) set.emplace_back(std::string(1, c));
  return splitclust::normalized(set);
}

}  // namespace testutil
