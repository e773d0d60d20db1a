#pragma once

// Core value types: permutations of {1..n}, partial permutations (injections
// {1..k} -> {1..n}), and their left-to-right minima/maxima decompositions.
// Values are 1-based everywhere; the empty permutation is a valid object.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pamlab {

using u64 = std::uint64_t;

namespace detail {

inline bool is_rearrangement_of_1_to_n(const std::vector<int>& v) {
  const int n = static_cast<int>(v.size());
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int x : v) {
    if (x < 1 || x > n || seen[static_cast<size_t>(x)]) return false;
    seen[static_cast<size_t>(x)] = 1;
  }
  return true;
}

}  // namespace detail

class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> values) : v_(std::move(values)) {
    if (!detail::is_rearrangement_of_1_to_n(v_))
      throw std::invalid_argument("permutation must be a rearrangement of 1..n");
  }

  // Trusts the caller; used by enumeration loops that maintain the invariant.
  static Permutation unchecked(std::vector<int> values) {
    Permutation p;
    p.v_ = std::move(values);
    return p;
  }

  static Permutation identity(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
    return unchecked(std::move(v));
  }

  const std::vector<int>& values() const { return v_; }
  size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }
  int operator[](size_t i) const { return v_[i]; }  // 0-based access

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return a.v_ != b.v_; }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.v_ < b.v_; }

 private:
  std::vector<int> v_;
};

inline Permutation make_permutation(std::vector<int> values) {
  return Permutation(std::move(values));
}

class PartialPermutation {
 public:
  PartialPermutation() = default;

  // ambient 0 is allowed so the empty object exists at every size,
  // including as the image of length-1 permutations under alpha.
  PartialPermutation(std::vector<int> values, int ambient)
      : v_(std::move(values)), ambient_(ambient) {
    if (ambient_ < 0) throw std::invalid_argument("ambient must be nonnegative");
    if (static_cast<int>(v_.size()) > ambient_)
      throw std::invalid_argument("partial permutation longer than its ambient");
    std::vector<char> seen(static_cast<size_t>(ambient_) + 1, 0);
    for (int x : v_) {
      if (x < 1 || x > ambient_ || seen[static_cast<size_t>(x)])
        throw std::invalid_argument("partial permutation values must be distinct, in 1..ambient");
      seen[static_cast<size_t>(x)] = 1;
    }
  }

  static PartialPermutation unchecked(std::vector<int> values, int ambient) {
    PartialPermutation a;
    a.v_ = std::move(values);
    a.ambient_ = ambient;
    return a;
  }

  const std::vector<int>& values() const { return v_; }
  size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }
  int ambient() const { return ambient_; }
  int operator[](size_t i) const { return v_[i]; }

  friend bool operator==(const PartialPermutation& a, const PartialPermutation& b) {
    return a.ambient_ == b.ambient_ && a.v_ == b.v_;
  }
  friend bool operator!=(const PartialPermutation& a, const PartialPermutation& b) {
    return !(a == b);
  }
  friend bool operator<(const PartialPermutation& a, const PartialPermutation& b) {
    if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_;
    return a.v_ < b.v_;
  }

 private:
  std::vector<int> v_;
  int ambient_ = 0;
};

inline Permutation reverse(const Permutation& p) {
  std::vector<int> v(p.values().rbegin(), p.values().rend());
  return Permutation::unchecked(std::move(v));
}

inline PartialPermutation reverse(const PartialPermutation& a) {
  std::vector<int> v(a.values().rbegin(), a.values().rend());
  return PartialPermutation::unchecked(std::move(v), a.ambient());
}

// ---------------------------------------------------------------------------
// Decompositions.

enum class DecompKind { ltr_min, ltr_max };

// Source permutation = pivot_1 block_1 pivot_2 block_2 ... pivot_t block_t.
// ltr_min pivots strictly decrease and end at 1; ltr_max pivots strictly
// increase and end at n. positions are 1-based indices of pivots in the source.
struct Decomposition {
  DecompKind kind = DecompKind::ltr_min;
  std::vector<int> pivots;
  std::vector<std::vector<int>> blocks;
  std::vector<int> positions;

  size_t block_count() const { return blocks.size(); }
};

inline Decomposition decompose(const Permutation& p, DecompKind kind) {
  if (p.empty()) throw std::invalid_argument("cannot decompose the empty permutation");
  Decomposition d;
  d.kind = kind;
  int best = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    const int v = p[i];
    const bool pivot = d.pivots.empty() ||
                       (kind == DecompKind::ltr_min ? v < best : v > best);
    if (pivot) {
      best = v;
      d.pivots.push_back(v);
      d.positions.push_back(static_cast<int>(i) + 1);
      d.blocks.emplace_back();
    } else {
      d.blocks.back().push_back(v);
    }
  }
  return d;
}

inline Permutation recompose(const Decomposition& d) {
  std::vector<int> v;
  for (size_t i = 0; i < d.pivots.size(); ++i) {
    v.push_back(d.pivots[i]);
    v.insert(v.end(), d.blocks[i].begin(), d.blocks[i].end());
  }
  return Permutation(std::move(v));
}

// ---------------------------------------------------------------------------
// Text formats. Compact digit strings ("231") are used when every value is a
// single digit; otherwise values are space-separated. Partial permutations
// carry an "of N" ambient suffix ("4 1 7 2 of 7").

namespace detail {

inline bool all_single_digit(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x >= 1 && x <= 9; });
}

inline std::string format_values(const std::vector<int>& v, bool compact) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (!compact && i > 0) s += ' ';
    s += std::to_string(v[i]);
  }
  return s;
}

inline std::vector<std::string> split_tokens(std::string_view text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == ',') {
      if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

inline int parse_value_token(const std::string& tok) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw std::invalid_argument("malformed value token '" + tok + "'");
  if (tok.size() > 3) throw std::invalid_argument("value token out of range '" + tok + "'");
  return std::stoi(tok);
}

// One multi-character token of digits 1..9 reads as a compact digit string.
inline bool compact_candidate(const std::vector<std::string>& tokens) {
  return tokens.size() == 1 && tokens[0].size() >= 2 &&
         std::all_of(tokens[0].begin(), tokens[0].end(),
                     [](char c) { return c >= '1' && c <= '9'; });
}

inline std::vector<int> expand_compact(const std::string& tok) {
  std::vector<int> v;
  v.reserve(tok.size());
  for (char c : tok) v.push_back(c - '0');
  return v;
}

}  // namespace detail

inline std::string to_string(const Permutation& p) {
  return detail::format_values(p.values(), detail::all_single_digit(p.values()));
}

inline std::string to_string(const PartialPermutation& a) {
  std::string s = detail::format_values(a.values(), false);
  if (!s.empty()) s += ' ';
  return s + "of " + std::to_string(a.ambient());
}

inline Permutation parse_permutation(std::string_view text) {
  const auto tokens = detail::split_tokens(text);
  if (tokens.empty()) throw std::invalid_argument("empty permutation text");
  if (detail::compact_candidate(tokens)) return Permutation(detail::expand_compact(tokens[0]));
  std::vector<int> v;
  v.reserve(tokens.size());
  for (const auto& t : tokens) v.push_back(detail::parse_value_token(t));
  return Permutation(std::move(v));
}

inline PartialPermutation parse_partial_permutation(std::string_view text) {
  auto tokens = detail::split_tokens(text);
  if (tokens.size() < 2 || tokens[tokens.size() - 2] != "of")
    throw std::invalid_argument("partial permutation needs an 'of N' suffix");
  const int ambient = detail::parse_value_token(tokens.back());
  tokens.pop_back();
  tokens.pop_back();
  // Compact reading only makes sense when values cannot be multi-digit.
  if (ambient <= 9 && detail::compact_candidate(tokens))
    return PartialPermutation(detail::expand_compact(tokens[0]), ambient);
  std::vector<int> v;
  v.reserve(tokens.size());
  for (const auto& t : tokens) v.push_back(detail::parse_value_token(t));
  return PartialPermutation(std::move(v), ambient);
}

// ---------------------------------------------------------------------------
// Enumeration. Permutations stream in lexicographic order; partial
// permutations stream by increasing length, lexicographically within a length.
// Streams are single-consumer; parallel sweeps partition by first element.

template <class F>
inline void for_each_permutation(int n, F&& f) {
  if (n < 0) throw std::invalid_argument("negative length");
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
  if (n == 0) {
    f(v);
    return;
  }
  do {
    f(const_cast<const std::vector<int>&>(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

// All permutations of length n with the given first element, in lexicographic
// order of the remainder. The union over first = 1..n is all of S_n.
template <class F>
inline void for_each_permutation_with_first(int n, int first, F&& f) {
  if (n < 1 || first < 1 || first > n) throw std::invalid_argument("bad first-element class");
  std::vector<int> rest;
  rest.reserve(static_cast<size_t>(n) - 1);
  for (int v = 1; v <= n; ++v)
    if (v != first) rest.push_back(v);
  std::vector<int> perm(static_cast<size_t>(n));
  perm[0] = first;
  if (n == 1) {
    f(const_cast<const std::vector<int>&>(perm));
    return;
  }
  do {
    std::copy(rest.begin(), rest.end(), perm.begin() + 1);
    f(const_cast<const std::vector<int>&>(perm));
  } while (std::next_permutation(rest.begin(), rest.end()));
}

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const std::vector<int>& v) { out.push_back(Permutation::unchecked(v)); });
  return out;
}

namespace detail {

template <class F>
inline void extend_partial(std::vector<int>& cur, std::vector<char>& used, int n, int k, F& f) {
  if (static_cast<int>(cur.size()) == k) {
    f(const_cast<const std::vector<int>&>(cur));
    return;
  }
  for (int v = 1; v <= n; ++v) {
    if (used[static_cast<size_t>(v)]) continue;
    used[static_cast<size_t>(v)] = 1;
    cur.push_back(v);
    extend_partial(cur, used, n, k, f);
    cur.pop_back();
    used[static_cast<size_t>(v)] = 0;
  }
}

}  // namespace detail

template <class F>
inline void for_each_partial_permutation(int n, F&& f) {
  if (n < 0) throw std::invalid_argument("negative ambient");
  std::vector<int> cur;
  std::vector<char> used(static_cast<size_t>(n) + 1, 0);
  for (int k = 0; k <= n; ++k) detail::extend_partial(cur, used, n, k, f);
}

inline std::vector<PartialPermutation> all_partial_permutations(int n) {
  std::vector<PartialPermutation> out;
  for_each_partial_permutation(n, [&](const std::vector<int>& v) {
    out.push_back(PartialPermutation::unchecked(v, n));
  });
  return out;
}

inline u64 factorial(int n) {
  u64 r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<u64>(i);
  return r;
}

}  // namespace pamlab
