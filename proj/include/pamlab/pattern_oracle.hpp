#pragma once

// Independent brute-force reference for every pattern predicate: enumerate
// index combinations outright and test order isomorphism, with none of the
// backtracking shortcuts the fast matchers use. Exists so the two
// implementations can be played against each other.

#include <stdexcept>
#include <vector>

#include "pamlab/patterns.hpp"
#include "pamlab/permutation.hpp"

namespace pamlab::oracle {

namespace detail {

// All size-k index combinations from {0..n-1} in lexicographic order.
template <class CB>
inline void each_combination(int n, int k, CB&& cb) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
  while (true) {
    if (!cb(const_cast<const std::vector<int>&>(idx))) return;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == i + n - k) --i;
    if (i < 0) return;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
}

}  // namespace detail

inline bool contains_classical(const std::vector<int>& host, const std::vector<int>& pat) {
  if (pat.empty()) return true;
  const int n = static_cast<int>(host.size());
  const int m = static_cast<int>(pat.size());
  if (m > n) return false;
  bool found = false;
  detail::each_combination(n, m, [&](const std::vector<int>& idx) {
    if (pamlab::detail::is_occurrence_at(host, idx, pat)) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

inline std::optional<std::vector<int>> find_occurrence(const std::vector<int>& host,
                                                       const std::vector<int>& pat) {
  if (pat.empty()) return std::vector<int>{};
  const int n = static_cast<int>(host.size());
  const int m = static_cast<int>(pat.size());
  if (m > n) return std::nullopt;
  std::optional<std::vector<int>> hit;
  detail::each_combination(n, m, [&](const std::vector<int>& idx) {
    if (pamlab::detail::is_occurrence_at(host, idx, pat)) {
      std::vector<int> one_based(idx.size());
      for (size_t i = 0; i < idx.size(); ++i) one_based[i] = idx[i] + 1;
      hit = std::move(one_based);
      return false;
    }
    return true;
  });
  return hit;
}

inline bool contains_anchored(const std::vector<int>& host, const std::vector<int>& pat) {
  if (pat.empty()) return true;
  const int n = static_cast<int>(host.size());
  const int m = static_cast<int>(pat.size());
  if (n == 0 || m > n) return false;
  bool found = false;
  detail::each_combination(n - 1, m - 1, [&](const std::vector<int>& tail) {
    std::vector<int> idx(static_cast<size_t>(m));
    idx[0] = 0;
    for (int i = 0; i + 1 < m; ++i) idx[static_cast<size_t>(i) + 1] = tail[static_cast<size_t>(i)] + 1;
    if (pamlab::detail::is_occurrence_at(host, idx, pat)) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

inline bool avoids_barred_prefix(const std::vector<int>& host, const PatternSpec& spec) {
  if (spec.kind() != PatternKind::barred_prefix)
    throw std::invalid_argument("oracle needs a barred-prefix spec");
  const auto& body = spec.body().values();
  const int b = spec.barred_position();
  const int z = static_cast<int>(body.size());
  const int n = static_cast<int>(host.size());
  if (n == 0) return true;
  const std::vector<int> tau = spec.reduced().values();
  const int zt = static_cast<int>(tau.size());
  if (zt > n) return true;
  bool all_extend = true;
  detail::each_combination(n - 1, zt - 1, [&](const std::vector<int>& tail) {
    std::vector<int> occ(static_cast<size_t>(zt));
    occ[0] = 0;
    for (int i = 0; i + 1 < zt; ++i) occ[static_cast<size_t>(i) + 1] = tail[static_cast<size_t>(i)] + 1;
    if (!pamlab::detail::is_occurrence_at(host, occ, tau)) return true;
    const int lo = occ[static_cast<size_t>(b) - 2];
    const int hi = (b == z) ? n : occ[static_cast<size_t>(b) - 1];
    for (int t = lo + 1; t < hi; ++t) {
      std::vector<int> ext;
      ext.reserve(static_cast<size_t>(z));
      for (int q = 0; q < b - 1; ++q) ext.push_back(occ[static_cast<size_t>(q)]);
      ext.push_back(t);
      for (int q = b - 1; q < z - 1; ++q) ext.push_back(occ[static_cast<size_t>(q)]);
      if (pamlab::detail::is_occurrence_at(host, ext, body)) return true;
    }
    all_extend = false;
    return false;
  });
  return all_extend;
}

inline bool contains_gap_312(const PartialPermutation& host) {
  const auto& v = host.values();
  const int m = static_cast<int>(v.size());
  bool found = false;
  detail::each_combination(m, 3, [&](const std::vector<int>& idx) {
    const int a = v[static_cast<size_t>(idx[0])];
    const int b = v[static_cast<size_t>(idx[1])];
    const int c = v[static_cast<size_t>(idx[2])];
    if (b < c && c < a) {
      for (int x = b; x <= c; ++x) {
        if (std::find(v.begin(), v.end(), x) == v.end()) {
          found = true;
          return false;
        }
      }
    }
    return true;
  });
  return found;
}

inline bool contains_adjacent_213(const PartialPermutation& host) {
  const auto& v = host.values();
  const int m = static_cast<int>(v.size());
  bool found = false;
  detail::each_combination(m, 3, [&](const std::vector<int>& idx) {
    const int a = v[static_cast<size_t>(idx[0])];
    const int b = v[static_cast<size_t>(idx[1])];
    const int c = v[static_cast<size_t>(idx[2])];
    if (b < a && a < c && a == c - 1) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

inline bool contains(const Permutation& host, const PatternSpec& spec) {
  switch (spec.kind()) {
    case PatternKind::classical: return contains_classical(host.values(), spec.body().values());
    case PatternKind::prefix_anchored:
      if (host.empty()) throw std::invalid_argument("anchored containment needs a nonempty host");
      return contains_anchored(host.values(), spec.body().values());
    case PatternKind::barred_prefix:
      if (host.empty()) throw std::invalid_argument("barred containment needs a nonempty host");
      return !avoids_barred_prefix(host.values(), spec);
    case PatternKind::special:
      throw std::invalid_argument("special patterns apply to partial permutations");
  }
  throw std::logic_error("unreachable");
}

inline bool contains(const PartialPermutation& host, const PatternSpec& spec) {
  switch (spec.kind()) {
    case PatternKind::classical: return contains_classical(host.values(), spec.body().values());
    case PatternKind::special:
      // qualified: ADL would also find the fast pamlab:: matchers
      return spec.special_name() == SpecialPattern::gap_312 ? oracle::contains_gap_312(host)
                                                            : oracle::contains_adjacent_213(host);
    case PatternKind::prefix_anchored:
    case PatternKind::barred_prefix:
      throw std::invalid_argument("anchored patterns apply to full permutations");
  }
  throw std::logic_error("unreachable");
}

}  // namespace pamlab::oracle
