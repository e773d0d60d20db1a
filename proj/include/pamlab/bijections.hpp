#pragma once

// The explicit maps between sortable classes and their counting partners:
//   hat / inverse_out_hat : the machine output map and its reverse formula;
//   alpha                 : [132-avoiders of length n  <->  partial
//                           permutations with ambient n-1;
//   phi                   : partial permutations avoiding {31|2, 2~13~}  <->
//                           partial permutations avoiding 213;
//   triangle swap/delete  : the two-class refinement of (123,132)-sortable
//                           permutations by first element.

#include <stdexcept>
#include <vector>

#include "pamlab/characterizations.hpp"
#include "pamlab/patterns.hpp"
#include "pamlab/permutation.hpp"
#include "pamlab/stack_machine.hpp"

namespace pamlab {

inline Permutation hat(const Permutation& sigma) {
  if (sigma.size() < 2) throw std::invalid_argument("hat needs length >= 2");
  std::vector<int> v = sigma.values();
  std::swap(v[0], v[1]);
  return Permutation::unchecked(std::move(v));
}

inline MachineConfig hat_machine(const Permutation& sigma) {
  return MachineConfig(std::vector<Permutation>{sigma, hat(sigma)});
}

// Inverse of out over the {sigma, sigma-hat} machine: run the machine on the
// reversed permutation and reverse the result.
inline Permutation inverse_out_hat(const Permutation& p, const Permutation& sigma) {
  return reverse(out_t(reverse(p), hat_machine(sigma)));
}

// ---------------------------------------------------------------------------
// alpha: position bookkeeping for the values below the first element.
// alpha(p)[v] = (position of v in p) - 1 for each value v < p_1; the result
// lives in ambient n-1. Values above p_1 are forced (increasing), which is
// exactly what [132-avoidance grants.

inline PartialPermutation alpha(const Permutation& p) {
  if (p.empty()) throw std::invalid_argument("alpha needs a nonempty permutation");
  static const Permutation p132({1, 3, 2});
  if (contains_anchored(p, p132))
    throw std::domain_error("alpha is defined on [132-avoiding permutations");
  const int first = p[0];
  std::vector<int> a(static_cast<size_t>(first) - 1, 0);
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] < first) a[static_cast<size_t>(p[i]) - 1] = static_cast<int>(i);
  return PartialPermutation(std::move(a), static_cast<int>(p.size()) - 1);
}

inline Permutation alpha_inverse(const PartialPermutation& a) {
  const int n = a.ambient() + 1;
  const int k = static_cast<int>(a.size());
  std::vector<int> p(static_cast<size_t>(n), 0);
  p[0] = k + 1;
  for (int v = 1; v <= k; ++v) {
    const int pos = a[static_cast<size_t>(v) - 1];  // 1-based position minus one
    if (p[static_cast<size_t>(pos)] != 0)
      throw std::invalid_argument("partial permutation does not describe positions");
    p[static_cast<size_t>(pos)] = v;
  }
  int next = k + 2;
  for (auto& slot : p)
    if (slot == 0) slot = next++;
  return Permutation(std::move(p));
}

// ---------------------------------------------------------------------------
// phi. Recursion splits at the minimum entry, a = A min B. When some value of
// B exceeds some value of A (case iii), the parts are rescaled so that A
// moves above B and the recursion proceeds on the adjusted parts:
//   x = max(A) + 1   (never present: the next value up from A's top, and a
//                     member would force a 2~13~ occurrence),
//   r = the largest B-value below min(A), or the minimum entry if B has none,
//   A shifts up by max(B) - x + 1; B-values above x drop by x - r - 1.

inline bool in_phi_domain(const PartialPermutation& a) {
  return !contains_gap_312(a) && !contains_adjacent_213(a);
}

namespace detail {

inline std::vector<int> phi_rec(std::vector<int> a) {
  if (a.empty()) return a;
  const auto mit = std::min_element(a.begin(), a.end());
  const int m = *mit;
  std::vector<int> A(a.begin(), mit), B(mit + 1, a.end());
  if (!A.empty() && !B.empty()) {
    const int loA = *std::min_element(A.begin(), A.end());
    const int hiB = *std::max_element(B.begin(), B.end());
    if (loA < hiB) {
      const int x = *std::max_element(A.begin(), A.end()) + 1;
      int r = m;  // every B-value exceeds the global minimum m
      for (int b : B)
        if (b < loA && b > r) r = b;
      for (int& v : A) v += hiB - x + 1;
      const int d = x - r - 1;
      for (int& v : B)
        if (v > x) v -= d;
    }
  }
  std::vector<int> out = phi_rec(std::move(A));
  out.push_back(m);
  const std::vector<int> right = phi_rec(std::move(B));
  out.insert(out.end(), right.begin(), right.end());
  return out;
}

}  // namespace detail

inline PartialPermutation phi(const PartialPermutation& a) {
  if (!in_phi_domain(a))
    throw std::domain_error("phi is defined on partial permutations avoiding 31|2 and 2~13~");
  // checked construction: the rescale must stay inside 1..ambient
  return PartialPermutation(detail::phi_rec(a.values()), a.ambient());
}

namespace detail {

inline bool avoids_213_values(const std::vector<int>& v) {
  static const std::vector<int> p213 = {2, 1, 3};
  return !contains_classical_values(v, p213);
}

// Undo one phi step. The image of case (ii) is recognized by every value of
// (min, max(D)] occurring in D; otherwise the case (iii) rescale is reversed
// by trying each feasible r and keeping the candidate that maps back. phi is
// injective on its domain, so at most one candidate survives the guard.
inline std::vector<int> phi_inv_rec(const std::vector<int>& q, int ambient) {
  if (q.empty()) return {};
  const auto mit = std::min_element(q.begin(), q.end());
  const int m = *mit;
  const std::vector<int> C(q.begin(), mit), D(mit + 1, q.end());
  const std::vector<int> RC = phi_inv_rec(C, ambient);
  const std::vector<int> RD = phi_inv_rec(D, ambient);
  auto glue = [&](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r = a;
    r.push_back(m);
    r.insert(r.end(), b.begin(), b.end());
    return r;
  };
  auto admissible = [&](const std::vector<int>& cand) {
    std::vector<char> seen(static_cast<size_t>(ambient) + 1, 0);
    for (int v : cand) {
      if (v < 1 || v > ambient || seen[static_cast<size_t>(v)]) return false;
      seen[static_cast<size_t>(v)] = 1;
    }
    const auto pp = PartialPermutation::unchecked(cand, ambient);
    return in_phi_domain(pp) && phi_rec(cand) == q;
  };
  if (C.empty() || D.empty()) return glue(RC, RD);

  const int maxD = *std::max_element(D.begin(), D.end());
  bool full_interval = true;
  for (int v = m + 1; v <= maxD && full_interval; ++v)
    full_interval = std::find(D.begin(), D.end(), v) != D.end();
  if (full_interval) {
    const std::vector<int> cand = glue(RC, RD);
    if (admissible(cand)) return cand;
  }

  const std::vector<int>& A2 = RC;
  const std::vector<int>& B2 = RD;
  const int maxA2 = *std::max_element(A2.begin(), A2.end());
  const int maxB2 = *std::max_element(B2.begin(), B2.end());
  const int minB2 = *std::min_element(B2.begin(), B2.end());
  const int d = maxA2 - maxB2;
  auto inB2 = [&](int v) { return std::find(B2.begin(), B2.end(), v) != B2.end(); };
  std::vector<int> candidates_r;
  if (!inB2(m + 1) && minB2 >= m + 2) candidates_r.push_back(m);
  for (int v : B2)
    if (!inB2(v + 1) && v != maxB2) candidates_r.push_back(v);
  for (const int r : candidates_r) {
    const int x = r + 1 + d;
    const int shift = maxA2 - x + 1;
    std::vector<int> A = A2;
    bool ok = true;
    for (int& v : A) {
      v -= shift;
      if (v < 1) ok = false;
    }
    if (!ok) continue;
    std::vector<int> B = B2;
    for (int& v : B)
      if (v > r + 1) v += d;
    const std::vector<int> cand = glue(A, B);
    if (admissible(cand)) return cand;
  }
  throw std::logic_error("no preimage found; input was not in phi's image");
}

}  // namespace detail

inline PartialPermutation phi_inverse(const PartialPermutation& q) {
  if (!detail::avoids_213_values(q.values()))
    throw std::domain_error("phi_inverse is defined on 213-avoiding partial permutations");
  return PartialPermutation(detail::phi_inv_rec(q.values(), q.ambient()), q.ambient());
}

// ---------------------------------------------------------------------------
// The triangle refinement of (123,132)-sortable permutations with first
// element k. Class A1: every anchored occurrence k .. p_i .. (k-1) of [231
// whose last letter is k-1 extends to [3412 via some smaller value between
// p_i and k-1. Class A2: some such occurrence does not extend.

struct TriangleClass {
  enum class Kind { A1, A2 };
  Kind kind;
  int n;
  int k;
};

namespace detail {

inline bool sortable_123_132(const Permutation& p) {
  static const MachineConfig machine = MachineConfig::parse("123,132");
  return is_sortable(p, machine);
}

inline bool triangle_is_a1(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  const int k = p[0];
  if (k == 1) return true;
  for (int i = 1; i < n; ++i) {
    if (p[static_cast<size_t>(i)] <= k) continue;
    for (int l = i + 1; l < n; ++l) {
      if (p[static_cast<size_t>(l)] != k - 1) continue;
      bool extends = false;
      for (int j = i + 1; j < l && !extends; ++j)
        if (p[static_cast<size_t>(j)] < k - 1) extends = true;
      if (!extends) return false;
    }
  }
  return true;
}

}  // namespace detail

inline TriangleClass classify_triangle(const Permutation& p) {
  if (p.empty() || !detail::sortable_123_132(p))
    throw std::domain_error("triangle classes cover (123,132)-sortable permutations");
  return TriangleClass{detail::triangle_is_a1(p.values()) ? TriangleClass::Kind::A1
                                                          : TriangleClass::Kind::A2,
                       static_cast<int>(p.size()), p[0]};
}

// A1 members with k >= 2: exchanging the values k and k-1 lands in A_n(k-1).
inline Permutation triangle_swap(const Permutation& p) {
  const auto cls = classify_triangle(p);
  if (cls.kind != TriangleClass::Kind::A1 || cls.k < 2)
    throw std::domain_error("triangle_swap applies to class A1 with first element >= 2");
  std::vector<int> v = p.values();
  for (int& x : v) {
    if (x == cls.k) x = cls.k - 1;
    else if (x == cls.k - 1) x = cls.k;
  }
  return Permutation::unchecked(std::move(v));
}

// A2 members: deleting the entry immediately before the value k-1 (and
// closing the value gap) lands in A_{n-1}(k).
inline Permutation triangle_delete(const Permutation& p) {
  const auto cls = classify_triangle(p);
  if (cls.kind != TriangleClass::Kind::A2)
    throw std::domain_error("triangle_delete applies to class A2");
  const auto& v = p.values();
  size_t i = 0;
  while (v[i] != cls.k - 1) ++i;
  const int deleted = v[i - 1];
  std::vector<int> out;
  out.reserve(v.size() - 1);
  for (size_t j = 0; j < v.size(); ++j) {
    if (j == i - 1) continue;
    out.push_back(v[j] > deleted ? v[j] - 1 : v[j]);
  }
  return Permutation(std::move(out));
}

// Inverse of the deletion: the re-inserted entry is the minimal value p_u
// above p_1 = k among positions strictly between the front and the value k-1
// that see some smaller-than-(k-1) value before k-1; when no such entry
// exists the new maximum n is inserted. The minimality is by value, not by
// position.
inline Permutation triangle_delete_inverse(const Permutation& p) {
  if (p.empty()) throw std::invalid_argument("needs a nonempty permutation");
  const int k = p[0];
  if (k < 2 || !detail::sortable_123_132(p))
    throw std::domain_error("triangle_delete_inverse applies to sortable inputs with first element >= 2");
  const auto& v = p.values();
  const int n = static_cast<int>(p.size()) + 1;
  size_t i = 0;
  while (v[i] != k - 1) ++i;
  int l = n;
  for (size_t u = 1; u < i; ++u) {
    if (v[u] <= k) continue;
    bool witness = false;
    for (size_t w = u + 1; w < i && !witness; ++w)
      if (v[w] < k - 1) witness = true;
    if (witness && v[u] < l) l = v[u];
  }
  std::vector<int> out;
  out.reserve(static_cast<size_t>(n));
  for (size_t j = 0; j < v.size(); ++j) {
    if (j == i) out.push_back(l);
    out.push_back(v[j] >= l ? v[j] + 1 : v[j]);
  }
  return Permutation(std::move(out));
}

}  // namespace pamlab
