#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semmap/vertex_type.hpp"

namespace semmap {

// Why a candidate (n, type) pair was discarded.
enum class Reject {
  none,
  spherical,        // Euler relation gives no positive vertex count
  non_integral,     // vertex count or a face count is not an integer
  vertex_floor,     // n below the configured minimum
  face_count_floor, // some face count below the configured minimum
  prop31_i,
  prop31_ii,
  prop31_iii,
  link_bound,
  completeness_bound,
  patch_bound,
  paper_exclusion,
};

std::string reject_str(Reject r);

struct TypeCensusEntry {
  long long n = 0;
  VertexType type;
  std::map<int, long long> face_vector;  // size -> count
  Reject rejection = Reject::none;

  bool operator<(const TypeCensusEntry& o) const {
    if (n != o.n) return n < o.n;
    return type < o.type;
  }
};

struct EnumerationParams {
  long long chi = -2;
  long long min_vertices = 12;
  long long min_face_count = 3;
  bool apply_paper_exclusions = true;
  // The patch-counting bound belongs to a later refinement stage than the
  // base census; it is off by default so the census matches the filters the
  // enumeration itself relies on.
  bool apply_patch_bound = false;
  bool keep_rejected = false;
};

struct CensusResult {
  std::vector<TypeCensusEntry> accepted;  // sorted by (n, type)
  std::vector<TypeCensusEntry> rejected;  // only when keep_rejected
};

// Canonicalization of a size cycle. Throws on entries < 3 or length < 3.
VertexType canonical_type(const std::vector<int>& sizes);

// The unique n with n*(1 - d/2 + sum 1/s_j) = chi, when it is a positive
// integer. Exact rational arithmetic throughout.
std::optional<long long> vertex_count(const VertexType& type, long long chi,
                                      Reject* why = nullptr);

// Face counts x_s = n*(occurrences of s)/s, when all integral.
std::optional<std::map<int, long long>> face_vector(const VertexType& type,
                                                    long long n,
                                                    Reject* why = nullptr);

// The three structural conditions that exclude a cyclic type outright,
// evaluated on the run-length form with cyclic subscripts; returns the first
// that fires (Reject::prop31_*) or Reject::none.
Reject prop31_check(const VertexType& type);

// Local counting obstructions at vertex count n, in order:
//  - link_bound:         1 + sum (s_j - 2) > n
//  - completeness_bound: 1 + sum (s_j - 2) = n but degree != n - 1
//  - patch_bound:        type of cyclic form (3,q,3,q) with 4q - 6 > n
Reject local_obstructions(const VertexType& type, long long n);

// Largest size the enumerator will test at the given degree (a finite,
// provably sufficient search bound for the parameters).
long long size_upper_bound(int degree, const EnumerationParams& params);

// All (n, type) pairs admissible for the parameters, one entry per distinct
// cyclic arrangement, sorted by (n, canonical sequence).
CensusResult enumerate_types(const EnumerationParams& params);

}  // namespace semmap
