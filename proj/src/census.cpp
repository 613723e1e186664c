#include "semmap/census.hpp"

#include <algorithm>
#include <set>

#include <boost/rational.hpp>

#include "semmap/error.hpp"

namespace semmap {

using Rat = boost::rational<long long>;

std::string reject_str(Reject r) {
  switch (r) {
    case Reject::none: return "accepted";
    case Reject::spherical: return "spherical/non-integral";
    case Reject::non_integral: return "spherical/non-integral";
    case Reject::vertex_floor: return "vertex_floor";
    case Reject::face_count_floor: return "face_count_floor";
    case Reject::prop31_i: return "prop31(i)";
    case Reject::prop31_ii: return "prop31(ii)";
    case Reject::prop31_iii: return "prop31(iii)";
    case Reject::link_bound: return "link_bound";
    case Reject::completeness_bound: return "completeness_bound";
    case Reject::patch_bound: return "patch_bound";
    case Reject::paper_exclusion: return "paper_exclusion";
  }
  return "?";
}

VertexType canonical_type(const std::vector<int>& sizes) {
  return VertexType::from_sizes(sizes);
}

namespace {

Rat euler_coefficient(const std::vector<int>& sizes) {
  Rat c(1);
  c -= Rat(static_cast<long long>(sizes.size()), 2);
  for (int s : sizes) c += Rat(1, s);
  return c;
}

}  // namespace

std::optional<long long> vertex_count(const VertexType& type, long long chi,
                                      Reject* why) {
  Rat coeff = euler_coefficient(type.sizes());
  if (coeff >= Rat(0)) {
    if (why) *why = Reject::spherical;
    return std::nullopt;
  }
  Rat n = Rat(chi) / coeff;
  if (n <= Rat(0)) {
    if (why) *why = Reject::spherical;
    return std::nullopt;
  }
  if (n.denominator() != 1) {
    if (why) *why = Reject::non_integral;
    return std::nullopt;
  }
  return n.numerator();
}

std::optional<std::map<int, long long>> face_vector(const VertexType& type,
                                                    long long n, Reject* why) {
  std::map<int, long long> x;
  for (auto [q, m] : type.size_multiset()) {
    long long num = n * m;
    if (num % q != 0) {
      if (why) *why = Reject::non_integral;
      return std::nullopt;
    }
    x[q] = num / q;
  }
  return x;
}

Reject prop31_check(const VertexType& type) {
  auto runs = type.run_lengths();
  int k = static_cast<int>(runs.size());
  auto unique_value = [&](int i) {
    for (int j = 0; j < k; ++j)
      if (j != i && runs[j].first == runs[i].first) return false;
    return true;
  };
  // (i): some run p^2 with p odd and p appearing in no other run
  for (int i = 0; i < k; ++i)
    if (runs[i].second == 2 && runs[i].first % 2 == 1 && unique_value(i))
      return Reject::prop31_i;
  // (ii): some run p^1, p odd, unique, whose cyclic neighbors differ
  if (k >= 2)
    for (int i = 0; i < k; ++i) {
      if (runs[i].second != 1 || runs[i].first % 2 == 0 || !unique_value(i))
        continue;
      int prev = runs[(i + k - 1) % k].first;
      int next = runs[(i + 1) % k].first;
      if (prev != next) return Reject::prop31_ii;
    }
  // (iii): cyclic form [p^1, q^m, p^1, r^n] with p, q, r distinct and p odd
  if (k == 4)
    for (int i = 0; i < 4; ++i) {
      int p = runs[i].first;
      if (runs[i].second != 1 || p % 2 == 0) continue;
      if (runs[(i + 2) % 4].second != 1 || runs[(i + 2) % 4].first != p) continue;
      int q = runs[(i + 1) % 4].first;
      int r = runs[(i + 3) % 4].first;
      if (q != r && q != p && r != p) return Reject::prop31_iii;
    }
  return Reject::none;
}

Reject local_obstructions(const VertexType& type, long long n) {
  long long closed_star = 1 + type.link_length();
  if (closed_star > n) return Reject::link_bound;
  if (closed_star == n && type.degree() != n - 1)
    return Reject::completeness_bound;
  const auto& s = type.sizes();
  if (s.size() == 4 && s[0] == 3 && s[2] == 3 && s[1] == s[3] && s[1] > 3) {
    long long q = s[1];
    if (4 * q - 6 > n) return Reject::patch_bound;
  }
  return Reject::none;
}

namespace {

// Not excluded by the three structural conditions as stated, but excluded by
// the census this module reproduces.
const std::vector<int> kStaticExclusion = {3, 3, 4, 3, 3, 4};

struct Enumerator {
  EnumerationParams params;
  long long face_floor;   // >= 1 (positivity is integrality anyway)
  long long max_size_tested = 0;
  std::set<std::vector<int>> multisets;

  explicit Enumerator(const EnumerationParams& p) : params(p) {
    face_floor = std::max<long long>(1, p.min_face_count);
  }

  int max_degree() const {
    // (d-6)*f_0 <= -6*chi with f_0 >= min_vertices
    int d = 3;
    while ((static_cast<long long>(d + 1) - 6) * params.min_vertices <=
           -6 * params.chi)
      ++d;
    return d;
  }

  void run() {
    int dmax = max_degree();
    for (int d = 3; d <= dmax; ++d) {
      std::vector<int> prefix;
      descend(d, prefix, Rat(1) - Rat(d, 2));
    }
  }

  // Nondecreasing multiset search. `base` is 1 - d/2 + sum of reciprocals of
  // the chosen prefix. Remaining entries are all >= the current candidate v,
  // so the final Euler coefficient D lies in (base, base + (r+1)/v] where r
  // counts the entries after this position. Acceptance needs
  //   chi/min_vertices <= D < 0
  // and, because every accepted type has x_s = n*m_s/s >= face_floor for its
  // largest entry s >= v, also D >= chi*d/(face_floor*v). Both cut the loop
  // off once v is large enough.
  void descend(int d, std::vector<int>& prefix, Rat base) {
    int pos = static_cast<int>(prefix.size());
    if (pos == d) {
      finalize(d, prefix, base);
      return;
    }
    if (base >= Rat(0)) return;  // every completion stays spherical
    int r_after = d - pos - 1;
    long long lo = prefix.empty() ? 3 : prefix.back();
    Rat floor_n = Rat(params.chi, std::max<long long>(1, params.min_vertices));
    for (long long v = lo;; ++v) {
      max_size_tested = std::max(max_size_tested, v);
      Rat dmax_here = base + Rat(1 + r_after, v);
      if (dmax_here < floor_n) break;  // n < min_vertices for all completions
      // face floor: largest entry s >= v forces n >= face_floor*v/d, hence
      // D >= chi*d/(face_floor*v); once even dmax_here is below that, done
      if (dmax_here < Rat(params.chi * d, face_floor * v)) break;
      Rat next_base = base + Rat(1, v);
      if (pos + 1 < d || next_base < Rat(0)) {
        prefix.push_back(static_cast<int>(v));
        descend(d, prefix, next_base);
        prefix.pop_back();
      }
    }
  }

  void finalize(int d, const std::vector<int>& sizes, Rat coeff) {
    if (coeff >= Rat(0)) return;
    (void)d;
    multisets.insert(sizes);
  }
};

std::vector<std::vector<int>> cyclic_arrangements(std::vector<int> multiset) {
  std::sort(multiset.begin(), multiset.end());
  std::set<std::vector<int>> out;
  do {
    out.insert(canonical_cycle(multiset));
  } while (std::next_permutation(multiset.begin(), multiset.end()));
  return {out.begin(), out.end()};
}

}  // namespace

long long size_upper_bound(int degree, const EnumerationParams& params) {
  Enumerator e(params);
  std::vector<int> prefix;
  e.descend(degree, prefix, Rat(1) - Rat(degree, 2));
  return e.max_size_tested;
}

CensusResult enumerate_types(const EnumerationParams& params) {
  if (params.chi >= 0) throw MapError("census enumeration expects chi < 0");
  if (params.min_vertices < 1 || params.min_face_count < 1)
    throw MapError("census floors must be at least 1");

  Enumerator e(params);
  e.run();

  CensusResult result;
  auto note = [&](TypeCensusEntry entry, Reject why) {
    entry.rejection = why;
    if (why == Reject::none)
      result.accepted.push_back(std::move(entry));
    else if (params.keep_rejected)
      result.rejected.push_back(std::move(entry));
  };

  for (const auto& multiset : e.multisets) {
    Reject why = Reject::none;
    VertexType probe = VertexType::from_sizes(multiset);
    // multiset-level filters first; rejected multisets are recorded once
    auto n = vertex_count(probe, params.chi, &why);
    if (!n) {
      note({0, probe, {}, Reject::none}, why);
      continue;
    }
    if (*n < params.min_vertices) {
      note({*n, probe, {}, Reject::none}, Reject::vertex_floor);
      continue;
    }
    auto xs = face_vector(probe, *n, &why);
    if (!xs) {
      note({*n, probe, {}, Reject::none}, why);
      continue;
    }
    bool floor_ok = true;
    for (auto [s, x] : *xs)
      if (x < params.min_face_count) floor_ok = false;
    if (!floor_ok) {
      note({*n, probe, *xs, Reject::none}, Reject::face_count_floor);
      continue;
    }
    for (const auto& arr : cyclic_arrangements(multiset)) {
      VertexType type = VertexType::from_sizes(arr);
      TypeCensusEntry entry{*n, type, *xs, Reject::none};
      Reject p = prop31_check(type);
      if (p != Reject::none) {
        note(std::move(entry), p);
        continue;
      }
      Reject lo = local_obstructions(type, *n);
      if (lo == Reject::patch_bound && !params.apply_patch_bound)
        lo = Reject::none;
      if (lo != Reject::none) {
        note(std::move(entry), lo);
        continue;
      }
      if (params.apply_paper_exclusions && type.sizes() == kStaticExclusion) {
        note(std::move(entry), Reject::paper_exclusion);
        continue;
      }
      note(std::move(entry), Reject::none);
    }
  }

  std::sort(result.accepted.begin(), result.accepted.end());
  std::sort(result.rejected.begin(), result.rejected.end());
  return result;
}

}  // namespace semmap
