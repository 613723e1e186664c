#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace semmap {

// Least representative of a cyclic integer sequence over all rotations and
// reflections.
std::vector<int> canonical_cycle(std::vector<int> seq);

// Cyclic sequence of face sizes around a vertex, kept in canonical form
// (lexicographically least over all rotations and reflections of the cycle).
//
// The run-length rendering [p1^n1,...,pk^nk] follows the usual convention:
// consecutive run values differ, cyclically, unless there is a single run.
class VertexType {
public:
  VertexType() = default;

  // Canonicalizes. Throws MapError if fewer than 3 entries or any entry < 3.
  static VertexType from_sizes(const std::vector<int>& sizes);

  // Accepts strings like "[3^4,10^1]", "[3^4,10]", "[ 3^2, 5, 3, 5 ]".
  static VertexType parse(std::string_view text);

  const std::vector<int>& sizes() const { return sizes_; }
  int degree() const { return static_cast<int>(sizes_.size()); }

  // (p_i, n_i) runs of the canonical cycle, wrap-around runs merged.
  std::vector<std::pair<int, int>> run_lengths() const;

  // (q_i, m_i) with q_1 < q_2 < ...; m_i = number of occurrences of q_i.
  std::vector<std::pair<int, int>> size_multiset() const;

  // Length of the link cycle of a vertex of this type: sum of (s_j - 2).
  long long link_length() const;

  std::string str() const;

  bool operator==(const VertexType& o) const { return sizes_ == o.sizes_; }
  bool operator!=(const VertexType& o) const { return sizes_ != o.sizes_; }
  bool operator<(const VertexType& o) const { return sizes_ < o.sizes_; }

private:
  std::vector<int> sizes_;
};

}  // namespace semmap
