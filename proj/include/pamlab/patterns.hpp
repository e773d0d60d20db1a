#pragma once

// Pattern containment for every notion used by the machines: classical
// patterns, prefix-anchored patterns [s (the occurrence must use the host's
// first element), barred-prefix patterns (one barred entry; every anchored
// occurrence of the reduced pattern must extend to the full body), and the
// two named patterns on partial permutations, 31|2 and 2~13~.
//
// Matching is direct backtracking scan: hosts stay below length 15 and
// patterns below length 6 throughout, so auditability wins over cleverness.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pamlab/permutation.hpp"

namespace pamlab {

enum class PatternKind { classical, prefix_anchored, barred_prefix, special };
enum class SpecialPattern { gap_312, adjacent_213 };

class PatternSpec {
 public:
  static PatternSpec classical(Permutation body) {
    if (body.empty()) throw std::invalid_argument("empty pattern");
    return PatternSpec(PatternKind::classical, std::move(body), 0, SpecialPattern::gap_312);
  }

  static PatternSpec anchored(Permutation body) {
    if (body.empty()) throw std::invalid_argument("empty pattern");
    return PatternSpec(PatternKind::prefix_anchored, std::move(body), 0, SpecialPattern::gap_312);
  }

  // barred_position is 1-based into body. Position 1 is rejected: the anchor
  // occupies the first slot, so nothing can be inserted in front of it.
  static PatternSpec barred(Permutation body, int barred_position) {
    const int z = static_cast<int>(body.size());
    if (z < 2) throw std::invalid_argument("barred pattern body too short");
    if (barred_position < 2 || barred_position > z)
      throw std::invalid_argument("barred position must lie in 2..len(body)");
    return PatternSpec(PatternKind::barred_prefix, std::move(body), barred_position,
                       SpecialPattern::gap_312);
  }

  static PatternSpec special(SpecialPattern which) {
    return PatternSpec(PatternKind::special, Permutation(), 0, which);
  }

  PatternKind kind() const { return kind_; }
  const Permutation& body() const { return body_; }
  bool anchored() const {
    return kind_ == PatternKind::prefix_anchored || kind_ == PatternKind::barred_prefix;
  }
  int barred_position() const { return barred_position_; }
  SpecialPattern special_name() const {
    if (kind_ != PatternKind::special) throw std::logic_error("not a special pattern");
    return special_;
  }

  // The bar-deleted, rescaled pattern; defined for barred-prefix specs only.
  Permutation reduced() const {
    if (kind_ != PatternKind::barred_prefix) throw std::logic_error("reduced() needs a barred pattern");
    std::vector<int> rest;
    for (size_t i = 0; i < body_.size(); ++i)
      if (static_cast<int>(i) + 1 != barred_position_) rest.push_back(body_[i]);
    std::vector<int> sorted = rest;
    std::sort(sorted.begin(), sorted.end());
    for (int& v : rest)
      v = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1;
    return Permutation(std::move(rest));
  }

  std::string literal() const {
    switch (kind_) {
      case PatternKind::classical:
        return detail::format_values(body_.values(), true);
      case PatternKind::prefix_anchored:
        return "[" + detail::format_values(body_.values(), true);
      case PatternKind::barred_prefix: {
        std::string s = "[";
        for (size_t i = 0; i < body_.size(); ++i) {
          if (static_cast<int>(i) + 1 == barred_position_) s += '^';
          s += std::to_string(body_[i]);
        }
        return s;
      }
      case PatternKind::special:
        return special_ == SpecialPattern::gap_312 ? "31|2" : "2~13~";
    }
    throw std::logic_error("unreachable");
  }

 private:
  PatternSpec(PatternKind k, Permutation b, int bp, SpecialPattern sp)
      : kind_(k), body_(std::move(b)), barred_position_(bp), special_(sp) {}

  PatternKind kind_;
  Permutation body_;
  int barred_position_;
  SpecialPattern special_;
};

// Literals: "2314" classical, "[132" anchored, "[24^13" barred (the caret
// precedes the barred entry), "31|2" and "2~13~" for the named specials.
inline PatternSpec parse_pattern(std::string_view text) {
  if (text == "31|2") return PatternSpec::special(SpecialPattern::gap_312);
  if (text == "2~13~") return PatternSpec::special(SpecialPattern::adjacent_213);
  bool anchored = false;
  size_t i = 0;
  if (!text.empty() && text[0] == '[') {
    anchored = true;
    i = 1;
  }
  std::vector<int> body;
  int barred_position = 0;
  bool bar_pending = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '^') {
      if (bar_pending || barred_position != 0)
        throw std::invalid_argument("pattern literal may carry at most one bar");
      bar_pending = true;
    } else if (c >= '1' && c <= '9') {
      body.push_back(c - '0');
      if (bar_pending) {
        barred_position = static_cast<int>(body.size());
        bar_pending = false;
      }
    } else {
      throw std::invalid_argument("malformed pattern literal '" + std::string(text) + "'");
    }
  }
  if (bar_pending) throw std::invalid_argument("bar must precede a pattern entry");
  if (barred_position != 0 && !anchored)
    throw std::invalid_argument("barred patterns are prefix-anchored; literal must start with '['");
  Permutation b(std::move(body));
  if (barred_position != 0) return PatternSpec::barred(std::move(b), barred_position);
  if (anchored) return PatternSpec::anchored(std::move(b));
  return PatternSpec::classical(std::move(b));
}

// ---------------------------------------------------------------------------
// Matchers. All operate on raw value sequences (distinct integers; only the
// relative order matters), so the same code serves full and partial hosts.

namespace detail {

// Does host[cand] extend the chosen prefix occ[0..got) consistently with
// pattern letter pat[got]?
inline bool order_compatible(const std::vector<int>& host, const std::vector<int>& pat,
                             const int* occ, int got, int cand) {
  for (int q = 0; q < got; ++q) {
    if ((host[static_cast<size_t>(occ[q])] < host[static_cast<size_t>(cand)]) !=
        (pat[static_cast<size_t>(q)] < pat[static_cast<size_t>(got)]))
      return false;
  }
  return true;
}

// Depth-first scan, smallest next index first: the witness found first is the
// lexicographically least one.
inline bool scan_occurrence(const std::vector<int>& host, const std::vector<int>& pat,
                            int got, int start, int* occ) {
  const int n = static_cast<int>(host.size());
  const int m = static_cast<int>(pat.size());
  if (got == m) return true;
  for (int i = start; i <= n - (m - got); ++i) {
    if (!order_compatible(host, pat, occ, got, i)) continue;
    occ[got] = i;
    if (scan_occurrence(host, pat, got + 1, i + 1, occ)) return true;
  }
  return false;
}

inline bool contains_classical_values(const std::vector<int>& host, const std::vector<int>& pat) {
  if (pat.empty()) return true;
  if (pat.size() > host.size()) return false;
  std::array<int, 16> occ{};
  return scan_occurrence(host, pat, 0, 0, occ.data());
}

inline bool contains_anchored_values(const std::vector<int>& host, const std::vector<int>& pat) {
  if (pat.empty()) return true;
  if (host.empty() || pat.size() > host.size()) return false;
  std::array<int, 16> occ{};
  occ[0] = 0;
  return scan_occurrence(host, pat, 1, 1, occ.data());
}

// Is the subsequence of host at idx (strictly increasing indices) order
// isomorphic to pat? Quadratic in the pattern length; lengths stay tiny.
inline bool is_occurrence_at(const std::vector<int>& host, const std::vector<int>& idx,
                             const std::vector<int>& pat) {
  const size_t m = pat.size();
  for (size_t a = 0; a < m; ++a)
    for (size_t b = a + 1; b < m; ++b)
      if ((host[static_cast<size_t>(idx[a])] < host[static_cast<size_t>(idx[b])]) !=
          (pat[a] < pat[b]))
        return false;
  return true;
}

// Enumerates every anchored occurrence of pat; cb returns false to stop.
// Returns false iff the enumeration was stopped early.
template <class CB>
inline bool each_anchored_occurrence(const std::vector<int>& host, const std::vector<int>& pat,
                                     int got, int start, std::vector<int>& occ, CB& cb) {
  const int n = static_cast<int>(host.size());
  const int m = static_cast<int>(pat.size());
  if (got == m) return cb(occ);
  for (int i = start; i <= n - (m - got); ++i) {
    if (!order_compatible(host, pat, occ.data(), got, i)) continue;
    occ[static_cast<size_t>(got)] = i;
    if (!each_anchored_occurrence(host, pat, got + 1, i + 1, occ, cb)) return false;
  }
  return true;
}

}  // namespace detail

inline bool contains_classical(const Permutation& host, const Permutation& pattern) {
  return detail::contains_classical_values(host.values(), pattern.values());
}

inline bool contains_classical(const PartialPermutation& host, const Permutation& pattern) {
  return detail::contains_classical_values(host.values(), pattern.values());
}

// First witness in lexicographic index order, 1-based; empty optional if none.
inline std::optional<std::vector<int>> find_occurrence(const Permutation& host,
                                                       const Permutation& pattern) {
  const auto& h = host.values();
  const auto& p = pattern.values();
  if (p.empty()) return std::vector<int>{};
  if (p.size() > h.size()) return std::nullopt;
  std::array<int, 16> occ{};
  if (!detail::scan_occurrence(h, p, 0, 0, occ.data())) return std::nullopt;
  std::vector<int> res(p.size());
  for (size_t i = 0; i < p.size(); ++i) res[i] = occ[i] + 1;
  return res;
}

inline bool contains_anchored(const Permutation& host, const Permutation& pattern) {
  if (host.empty()) throw std::invalid_argument("anchored containment needs a nonempty host");
  return detail::contains_anchored_values(host.values(), pattern.values());
}

// True iff every anchored occurrence of the reduced pattern extends, by
// inserting one host element in the bar's slot, to an anchored occurrence of
// the full body. Vacuously true when the reduced pattern never occurs.
inline bool avoids_barred_prefix(const Permutation& host, const PatternSpec& spec) {
  if (spec.kind() != PatternKind::barred_prefix)
    throw std::invalid_argument("avoids_barred_prefix needs a barred-prefix spec");
  if (host.empty()) throw std::invalid_argument("barred containment needs a nonempty host");
  const auto& h = host.values();
  const auto& body = spec.body().values();
  const int b = spec.barred_position();
  const int z = static_cast<int>(body.size());
  const int n = static_cast<int>(h.size());
  const std::vector<int> tau = spec.reduced().values();
  if (static_cast<int>(tau.size()) > n) return true;

  std::vector<int> occ(tau.size());
  std::vector<int> ext(static_cast<size_t>(z));
  auto extendable = [&](const std::vector<int>& o) -> bool {
    // o maps tau letters to host indices; tau letter q corresponds to body
    // slot q+1 for q+1 < b and to slot q+2 afterwards.
    for (int q = 0; q < b - 1; ++q) ext[static_cast<size_t>(q)] = o[static_cast<size_t>(q)];
    for (int q = b - 1; q < z - 1; ++q) ext[static_cast<size_t>(q) + 1] = o[static_cast<size_t>(q)];
    const int lo = o[static_cast<size_t>(b) - 2];
    const int hi = (b == z) ? n : o[static_cast<size_t>(b) - 1];
    for (int t = lo + 1; t < hi; ++t) {
      ext[static_cast<size_t>(b) - 1] = t;
      if (detail::is_occurrence_at(h, ext, body)) return true;
    }
    return false;
  };
  bool all_extend = true;
  auto cb = [&](const std::vector<int>& o) -> bool {
    if (extendable(o)) return true;
    all_extend = false;
    return false;  // one unextendable occurrence settles it
  };
  if (tau.empty()) return true;
  occ[0] = 0;
  if (tau.size() == 1) {
    return cb(occ), all_extend;
  }
  detail::each_anchored_occurrence(h, tau, 1, 1, occ, cb);
  return all_extend;
}

// 31|2: a 312 occurrence whose closing interval [a_j, a_k] misses some value
// of the host's value set.
inline bool contains_gap_312(const PartialPermutation& host) {
  const auto& v = host.values();
  const int m = static_cast<int>(v.size());
  if (m < 3) return false;
  std::vector<char> present(static_cast<size_t>(host.ambient()) + 1, 0);
  for (int x : v) present[static_cast<size_t>(x)] = 1;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (v[static_cast<size_t>(j)] >= v[static_cast<size_t>(i)]) continue;
      for (int k = j + 1; k < m; ++k) {
        const int a = v[static_cast<size_t>(i)], bq = v[static_cast<size_t>(j)],
                  c = v[static_cast<size_t>(k)];
        if (!(bq < c && c < a)) continue;
        for (int x = bq; x <= c; ++x)
          if (!present[static_cast<size_t>(x)]) return true;
      }
    }
  return false;
}

// 2~13~: a 213 occurrence whose first and last letters are consecutive values.
inline bool contains_adjacent_213(const PartialPermutation& host) {
  const auto& v = host.values();
  const int m = static_cast<int>(v.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (v[static_cast<size_t>(j)] >= v[static_cast<size_t>(i)]) continue;
      for (int k = j + 1; k < m; ++k)
        if (v[static_cast<size_t>(k)] == v[static_cast<size_t>(i)] + 1) return true;
    }
  return false;
}

// ---------------------------------------------------------------------------
// Unified dispatch. Specials apply to partial hosts only; anchored and barred
// patterns apply to full permutations only; classical applies to both.

inline bool contains(const Permutation& host, const PatternSpec& spec) {
  switch (spec.kind()) {
    case PatternKind::classical: return contains_classical(host, spec.body());
    case PatternKind::prefix_anchored: return contains_anchored(host, spec.body());
    case PatternKind::barred_prefix: return !avoids_barred_prefix(host, spec);
    case PatternKind::special:
      throw std::invalid_argument("special patterns apply to partial permutations");
  }
  throw std::logic_error("unreachable");
}

inline bool contains(const PartialPermutation& host, const PatternSpec& spec) {
  switch (spec.kind()) {
    case PatternKind::classical: return contains_classical(host, spec.body());
    case PatternKind::special:
      return spec.special_name() == SpecialPattern::gap_312 ? contains_gap_312(host)
                                                            : contains_adjacent_213(host);
    case PatternKind::prefix_anchored:
    case PatternKind::barred_prefix:
      throw std::invalid_argument("anchored patterns apply to full permutations");
  }
  throw std::logic_error("unreachable");
}

template <class Host>
inline bool avoids(const Host& host, const PatternSpec& spec) {
  return !contains(host, spec);
}

template <class Host>
inline bool avoids_all(const Host& host, const std::vector<PatternSpec>& specs) {
  for (const auto& s : specs)
    if (contains(host, s)) return false;
  return true;
}

}  // namespace pamlab
