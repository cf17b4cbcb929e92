#include "splitclust/instance.hpp"

#include <cctype>

#include "splitclust/error.hpp"

namespace splitclust {

std::string_view to_string(Problem p) {
  switch (p) {
    case Problem::NCC: return "ncc";
    case Problem::SCC: return "scc";
    case Problem::CVS: return "cvs";
    case Problem::CEVS: return "cevs";
  }
  return "?";
}

std::optional<Problem> parse_problem(std::string_view s) {
  std::string lower;
  for (char c : s) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (auto p : {Problem::NCC, Problem::SCC, Problem::CVS, Problem::CEVS}) {
    if (lower == to_string(p)) return p;
  }
  return std::nullopt;
}

void expect_problem(const Instance& inst, Problem expected) {
  if (inst.problem != expected) {
    throw Error(ErrorKind::WrongProblem, "expected a " + std::string(to_string(expected)) +
                                             " instance, got " + std::string(to_string(inst.problem)));
  }
}

}  // namespace splitclust
