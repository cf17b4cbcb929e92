#include "splitclust/vertex_id.hpp"

#include <algorithm>
#include <cctype>

#include "splitclust/error.hpp"

namespace splitclust {

namespace {

bool all_digits(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

void check_root(const std::string& root) {
  if (root.empty()) throw Error(ErrorKind::InvalidVertexId, "empty vertex name");
  for (unsigned char c : root) {
    if (std::isspace(c) || c == '.' || !std::isprint(c)) {
      throw Error(ErrorKind::InvalidVertexId, "bad character in vertex name '" + root + "'");
    }
  }
}

std::strong_ordering compare_roots(const std::string& a, const std::string& b) {
  const bool da = all_digits(a);
  const bool db = all_digits(b);
  if (da != db) return da ? std::strong_ordering::less : std::strong_ordering::greater;
  if (da && a.size() != b.size()) return a.size() <=> b.size();
  return a.compare(b) <=> 0;
}

}  // namespace

VertexId::VertexId(std::string root) : root_(std::move(root)) { check_root(root_); }

VertexId VertexId::parse(std::string_view text) {
  const auto dot = text.find('.');
  VertexId id{std::string(text.substr(0, dot))};
  if (dot == std::string_view::npos) return id;
  std::string_view rest = text.substr(dot + 1);
  while (true) {
    const auto next = rest.find('.');
    const auto part = rest.substr(0, next);
    if (part != "0" && part != "1") {
      throw Error(ErrorKind::InvalidVertexId,
                  "split branch must be 0 or 1 in '" + std::string(text) + "'");
    }
    id.branches_.push_back(static_cast<std::uint8_t>(part[0] - '0'));
    if (next == std::string_view::npos) break;
    rest = rest.substr(next + 1);
  }
  return id;
}

VertexId VertexId::child(int side) const {
  VertexId c = *this;
  c.branches_.push_back(static_cast<std::uint8_t>(side != 0 ? 1 : 0));
  return c;
}

VertexId VertexId::parent() const {
  VertexId p = *this;
  if (!p.branches_.empty()) p.branches_.pop_back();
  return p;
}

std::string VertexId::str() const {
  std::string s = root_;
  for (auto b : branches_) {
    s += '.';
    s += static_cast<char>('0' + b);
  }
  return s;
}

std::strong_ordering operator<=>(const VertexId& a, const VertexId& b) {
  if (auto c = compare_roots(a.root_, b.root_); c != 0) return c;
  return a.branches_ <=> b.branches_;
}

std::ostream& operator<<(std::ostream& os, const VertexId& v) { return os << v.str(); }

VertexSet& normalize(VertexSet& set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

VertexSet normalized(VertexSet set) {
  normalize(set);
  return set;
}

}  // namespace splitclust

std::size_t std::hash<splitclust::VertexId>::operator()(
    const splitclust::VertexId& v) const noexcept {
  std::size_t h = std::hash<std::string>{}(v.root());
  for (auto b : v.branches()) h = h * 31 + b + 1;
  return h;
}
