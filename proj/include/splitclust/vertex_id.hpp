#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace splitclust {

/// Stable vertex name. A root token (no whitespace, no dots) followed by one
/// 0/1 branch per split that produced the vertex: "b", "b.0", "b.0.1".
///
/// Ordering: all-digit roots first in numeric order, then the remaining roots
/// in byte order; equal roots compare by their branch paths, shorter prefix
/// first.  Every deterministic iteration in the library follows this order.
class VertexId {
 public:
  VertexId() = default;
  explicit VertexId(std::string root);
  VertexId(const char* root) : VertexId(std::string(root)) {}

  /// Parses the dotted form ("c", "c.1.0").
  static VertexId parse(std::string_view text);
  static VertexId number(std::size_t n) { return VertexId(std::to_string(n)); }

  const std::string& root() const noexcept { return root_; }
  const std::vector<std::uint8_t>& branches() const noexcept { return branches_; }
  bool is_copy() const noexcept { return !branches_.empty(); }

  /// The copy created on the given side of a split (0 or 1).
  VertexId child(int side) const;
  VertexId parent() const;

  std::string str() const;

  friend bool operator==(const VertexId&, const VertexId&) = default;
  friend std::strong_ordering operator<=>(const VertexId& a, const VertexId& b);

 private:
  std::string root_;
  std::vector<std::uint8_t> branches_;
};

std::ostream& operator<<(std::ostream& os, const VertexId& v);

using VertexSet = std::vector<VertexId>;  // sorted, unique

/// Sorts and removes duplicates in place; returns the argument for chaining.
VertexSet& normalize(VertexSet& set);
VertexSet normalized(VertexSet set);

}  // namespace splitclust

template <>
struct std::hash<splitclust::VertexId> {
  std::size_t operator()(const splitclust::VertexId& v) const noexcept;
};
