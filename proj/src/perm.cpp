#include "semmap/perm.hpp"

#include <numeric>
#include <sstream>

namespace semmap {

VertexPermutation VertexPermutation::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  return VertexPermutation(std::move(img));
}

bool VertexPermutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (img[i] != i) return false;
  return true;
}

bool VertexPermutation::is_involution() const {
  for (int i = 0; i < size(); ++i)
    if (img[img[i]] != i) return false;
  return true;
}

long long VertexPermutation::order() const {
  long long ord = 1;
  std::vector<char> seen(size(), 0);
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (int j = i; !seen[j]; j = img[j]) {
      seen[j] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

VertexPermutation VertexPermutation::compose(const VertexPermutation& then) const {
  std::vector<int> out(size());
  for (int i = 0; i < size(); ++i) out[i] = then.img[img[i]];
  return VertexPermutation(std::move(out));
}

VertexPermutation VertexPermutation::inverse() const {
  std::vector<int> out(size());
  for (int i = 0; i < size(); ++i) out[img[i]] = i;
  return VertexPermutation(std::move(out));
}

std::string VertexPermutation::cycle_string(
    const std::vector<long long>& labels) const {
  if (static_cast<int>(labels.size()) != size())
    throw MapError("label table size mismatch in cycle_string");
  std::ostringstream out;
  std::vector<char> seen(size(), 0);
  bool any = false;
  for (int i = 0; i < size(); ++i) {
    if (seen[i] || img[i] == i) {
      seen[i] = 1;
      continue;
    }
    any = true;
    out << '(';
    bool first = true;
    for (int j = i; !seen[j]; j = img[j]) {
      seen[j] = 1;
      if (!first) out << ',';
      first = false;
      out << labels[j];
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

std::string VertexPermutation::cycle_string() const {
  std::vector<long long> labels(size());
  std::iota(labels.begin(), labels.end(), 0);
  return cycle_string(labels);
}

}  // namespace semmap
