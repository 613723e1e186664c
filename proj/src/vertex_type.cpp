#include "semmap/vertex_type.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "semmap/error.hpp"

namespace semmap {

std::vector<int> canonical_cycle(std::vector<int> seq) {
  if (seq.size() <= 1) return seq;
  std::vector<int> best = seq;
  const size_t d = seq.size();
  for (int refl = 0; refl < 2; ++refl) {
    for (size_t r = 0; r < d; ++r) {
      std::vector<int> cand(d);
      for (size_t i = 0; i < d; ++i) cand[i] = seq[(r + i) % d];
      if (cand < best) best = cand;
    }
    std::reverse(seq.begin(), seq.end());
  }
  return best;
}

VertexType VertexType::from_sizes(const std::vector<int>& sizes) {
  if (sizes.size() < 3)
    throw MapError("vertex type needs at least 3 face sizes, got " +
                   std::to_string(sizes.size()));
  for (int s : sizes)
    if (s < 3)
      throw MapError("vertex type entry " + std::to_string(s) + " is below 3");
  VertexType t;
  t.sizes_ = canonical_cycle(sizes);
  return t;
}

std::vector<std::pair<int, int>> VertexType::run_lengths() const {
  std::vector<std::pair<int, int>> runs;
  for (int s : sizes_) {
    if (!runs.empty() && runs.back().first == s)
      ++runs.back().second;
    else
      runs.emplace_back(s, 1);
  }
  // merge the wrap-around run of the cyclic sequence
  if (runs.size() > 1 && runs.front().first == runs.back().first) {
    runs.front().second += runs.back().second;
    runs.pop_back();
  }
  return runs;
}

std::vector<std::pair<int, int>> VertexType::size_multiset() const {
  std::map<int, int> counts;
  for (int s : sizes_) ++counts[s];
  return {counts.begin(), counts.end()};
}

long long VertexType::link_length() const {
  long long total = 0;
  for (int s : sizes_) total += s - 2;
  return total;
}

std::string VertexType::str() const {
  std::ostringstream out;
  out << '[';
  bool first = true;
  for (auto [p, n] : run_lengths()) {
    if (!first) out << ',';
    first = false;
    out << p << '^' << n;
  }
  out << ']';
  return out.str();
}

VertexType VertexType::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw MapError("vertex type string must be of the form [p1^n1,...]: " +
                   std::string(text));
  s = s.substr(1, s.size() - 2);
  std::vector<int> sizes;
  std::stringstream items(s);
  std::string item;
  while (std::getline(items, item, ',')) {
    if (item.empty()) throw MapError("empty item in vertex type string");
    long long p = 0, n = 1;
    size_t caret = item.find('^');
    try {
      if (caret == std::string::npos) {
        p = std::stoll(item);
      } else {
        p = std::stoll(item.substr(0, caret));
        n = std::stoll(item.substr(caret + 1));
      }
    } catch (const std::exception&) {
      throw MapError("bad vertex type item '" + item + "'");
    }
    if (p < 3 || n < 1 || n > 64)
      throw MapError("bad vertex type item '" + item + "'");
    for (long long i = 0; i < n; ++i) sizes.push_back(static_cast<int>(p));
  }
  return from_sizes(sizes);
}

}  // namespace semmap
