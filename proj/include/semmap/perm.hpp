#pragma once

#include <string>
#include <vector>

#include "semmap/error.hpp"

namespace semmap {

// Permutation of 0..n-1, used for vertex bijections of maps. Rendering in
// disjoint-cycle notation is done against a label table so that output uses
// the map's own vertex labels.
struct VertexPermutation {
  std::vector<int> img;

  VertexPermutation() = default;
  explicit VertexPermutation(std::vector<int> image) : img(std::move(image)) {}

  static VertexPermutation identity(int n);

  int size() const { return static_cast<int>(img.size()); }
  int operator()(int i) const { return img[i]; }
  bool is_identity() const;
  bool is_involution() const;
  long long order() const;

  VertexPermutation compose(const VertexPermutation& then) const;  // then∘this
  VertexPermutation inverse() const;

  // "(0,6)(4,10)(3,9)"; fixed points omitted; identity renders as "()"
  std::string cycle_string(const std::vector<long long>& labels) const;
  std::string cycle_string() const;  // labels = indices

  bool operator==(const VertexPermutation& o) const { return img == o.img; }
  bool operator<(const VertexPermutation& o) const { return img < o.img; }
};

}  // namespace semmap
