#pragma once

// Non-simulation criteria for sortability, one predicate per published
// description, so theory and machine can be played against each other:
//   (132,231): avoid {1324, 2314}; equivalently ltr-min blocks avoid 213 and
//              successive blocks strictly decrease between each other.
//   (123,132): avoid {2314, 3214, 4213, [24^13}.
//   (123,312): avoid {[132, [42531, [421^53}; equivalently four structural
//              conditions on the ltr-max decomposition and the machine output.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pamlab/patterns.hpp"
#include "pamlab/permutation.hpp"
#include "pamlab/stack_machine.hpp"

namespace pamlab {

enum class PairId {
  p132_231,
  p123_213,
  p132_312,
  p231_321,
  p123_132,
  p123_312,
};

inline PairId parse_pair(std::string_view s) {
  if (s == "132,231") return PairId::p132_231;
  if (s == "123,213") return PairId::p123_213;
  if (s == "132,312") return PairId::p132_312;
  if (s == "231,321") return PairId::p231_321;
  if (s == "123,132") return PairId::p123_132;
  if (s == "123,312") return PairId::p123_312;
  throw std::invalid_argument("unknown pair '" + std::string(s) + "'");
}

inline std::string pair_literal(PairId p) {
  switch (p) {
    case PairId::p132_231: return "132,231";
    case PairId::p123_213: return "123,213";
    case PairId::p132_312: return "132,312";
    case PairId::p231_321: return "231,321";
    case PairId::p123_132: return "123,132";
    case PairId::p123_312: return "123,312";
  }
  throw std::logic_error("unreachable");
}

inline MachineConfig machine_for(PairId p) {
  return MachineConfig::parse(pair_literal(p));
}

inline bool has_pattern_characterization(PairId p) {
  return p == PairId::p132_231 || p == PairId::p123_132 || p == PairId::p123_312;
}

inline const std::vector<PatternSpec>& characterization_patterns(PairId p) {
  static const std::vector<PatternSpec> for_132_231 = {
      PatternSpec::classical(Permutation({1, 3, 2, 4})),
      PatternSpec::classical(Permutation({2, 3, 1, 4})),
  };
  static const std::vector<PatternSpec> for_123_132 = {
      PatternSpec::classical(Permutation({2, 3, 1, 4})),
      PatternSpec::classical(Permutation({3, 2, 1, 4})),
      PatternSpec::classical(Permutation({4, 2, 1, 3})),
      PatternSpec::barred(Permutation({2, 4, 1, 3}), 3),
  };
  static const std::vector<PatternSpec> for_123_312 = {
      PatternSpec::anchored(Permutation({1, 3, 2})),
      PatternSpec::anchored(Permutation({4, 2, 5, 3, 1})),
      PatternSpec::barred(Permutation({4, 2, 1, 5, 3}), 4),
  };
  switch (p) {
    case PairId::p132_231: return for_132_231;
    case PairId::p123_132: return for_123_132;
    case PairId::p123_312: return for_123_312;
    default:
      throw std::invalid_argument("pair " + pair_literal(p) + " has no pattern characterization");
  }
}

inline bool sortable_by_patterns(const Permutation& p, PairId pair) {
  return avoids_all(p, characterization_patterns(pair));
}

inline std::optional<PatternSpec> first_violated_pattern(const Permutation& p, PairId pair) {
  for (const auto& s : characterization_patterns(pair))
    if (contains(p, s)) return s;
  return std::nullopt;
}

// Every ltr-min block avoids 213 and every element of an earlier block
// exceeds every element of a later one (all pairs of blocks, not only
// consecutive ones: empty middle blocks must not break the chain).
inline bool sortable_by_blocks_132_231(const Permutation& p) {
  if (p.empty()) throw std::invalid_argument("needs a nonempty permutation");
  const auto d = decompose(p, DecompKind::ltr_min);
  static const std::vector<int> p213 = {2, 1, 3};
  for (const auto& b : d.blocks)
    if (detail::contains_classical_values(b, p213)) return false;
  for (size_t i = 0; i < d.blocks.size(); ++i)
    for (size_t j = i + 1; j < d.blocks.size(); ++j)
      for (int x : d.blocks[i])
        for (int y : d.blocks[j])
          if (x < y) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Block-labelled patterns on the machine output. Labels name the input block
// each value came from (label 0 marks pivots); they are carried through the
// machine by value, not recomputed from the output.

// label_of_value[v] = 0 for pivots, the 1-based input block index otherwise.
inline std::vector<int> block_labels(const Permutation& p, DecompKind kind) {
  const auto d = decompose(p, kind);
  std::vector<int> label(p.size() + 1, 0);
  for (size_t i = 0; i < d.blocks.size(); ++i)
    for (int v : d.blocks[i]) label[static_cast<size_t>(v)] = static_cast<int>(i) + 1;
  return label;
}

// An occurrence x y z (in output order) with values z < x < y spread over
// three strictly increasing distinct blocks.
inline bool block_pattern_2_3_1(const std::vector<int>& out, const std::vector<int>& label_of_value) {
  const int m = static_cast<int>(out.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k) {
        const int x = out[static_cast<size_t>(i)], y = out[static_cast<size_t>(j)],
                  z = out[static_cast<size_t>(k)];
        const int lx = label_of_value[static_cast<size_t>(x)],
                  ly = label_of_value[static_cast<size_t>(y)],
                  lz = label_of_value[static_cast<size_t>(z)];
        if (lx && ly && lz && lx < ly && ly < lz && z < x && x < y) return true;
      }
  return false;
}

// Same shape, but y and z share one block strictly after x's block.
inline bool block_pattern_2_31(const std::vector<int>& out, const std::vector<int>& label_of_value) {
  const int m = static_cast<int>(out.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k) {
        const int x = out[static_cast<size_t>(i)], y = out[static_cast<size_t>(j)],
                  z = out[static_cast<size_t>(k)];
        const int lx = label_of_value[static_cast<size_t>(x)],
                  ly = label_of_value[static_cast<size_t>(y)],
                  lz = label_of_value[static_cast<size_t>(z)];
        if (lx && ly && lz && lx < ly && ly == lz && z < x && x < y) return true;
      }
  return false;
}

// The four structural conditions equivalent to (123,312)-sortability:
//   1. the ltr-max pivots are exactly the top t values;
//   2. every ltr-max block avoids 213;
//   3. the machine output has no 2-3-1 occurrence across three blocks;
//   4. nor any 2-31 occurrence across two blocks.
inline bool four_conditions_123_312(const Permutation& p) {
  if (p.empty()) throw std::invalid_argument("needs a nonempty permutation");
  const int n = static_cast<int>(p.size());
  const auto d = decompose(p, DecompKind::ltr_max);
  const int t = static_cast<int>(d.pivots.size());
  for (int j = 0; j < t; ++j)
    if (d.pivots[static_cast<size_t>(j)] != n - t + 1 + j) return false;
  static const std::vector<int> p213 = {2, 1, 3};
  for (const auto& b : d.blocks)
    if (detail::contains_classical_values(b, p213)) return false;
  static const MachineConfig machine = MachineConfig::parse("123,312");
  const auto out = detail::run_greedy(p.values(), machine, nullptr).out;
  const auto label = block_labels(p, DecompKind::ltr_max);
  return !block_pattern_2_3_1(out, label) && !block_pattern_2_31(out, label);
}

// Every later block sits entirely above or entirely below each element of an
// earlier block. Given conditions 1..3 this is equivalent to the absence of
// 2-31 in the output.
inline bool bounded_blocks_lemma_check(const Permutation& p) {
  if (p.empty()) throw std::invalid_argument("needs a nonempty permutation");
  const auto d = decompose(p, DecompKind::ltr_max);
  for (size_t i = 0; i < d.blocks.size(); ++i)
    for (size_t j = i + 1; j < d.blocks.size(); ++j)
      for (int x : d.blocks[i]) {
        bool above = false, below = false;
        for (int y : d.blocks[j]) (y > x ? above : below) = true;
        if (above && below) return false;
      }
  return true;
}

// ---------------------------------------------------------------------------
// Structural shape of the output for whole machine families.

enum class MachineFamily { f132_descent, f312_ascent };

struct StructureReport {
  bool pivots_at_bottom = false;       // output ends pivot_t .. pivot_1
  bool blocks_rearranged = false;      // output starts B~_1 ... B~_t, each a rearrangement
  bool blocks_decreasing = true;       // sortable inputs, 132-family: each B~_i decreasing
  bool blocks_ordered = true;          // sortable inputs, 132-family: B~_i > B~_j for i < j
  bool max_pivots_topmost = true;      // sortable inputs, 312-family: pivots are top t values

  bool all() const {
    return pivots_at_bottom && blocks_rearranged && blocks_decreasing && blocks_ordered &&
           max_pivots_topmost;
  }
};

// sigma must have length >= 3 and end in a descent (132-family) or an ascent
// (312-family); the machine is {132, sigma} resp. {312, sigma}.
inline StructureReport structure_report(const Permutation& p, MachineFamily family,
                                        const Permutation& sigma) {
  if (p.empty()) throw std::invalid_argument("needs a nonempty permutation");
  const size_t m = sigma.size();
  if (m < 3) throw std::invalid_argument("sigma must have length >= 3");
  const bool ends_descent = sigma[m - 2] > sigma[m - 1];
  if (family == MachineFamily::f132_descent && !ends_descent)
    throw std::invalid_argument("132-family requires sigma ending in a descent");
  if (family == MachineFamily::f312_ascent && ends_descent)
    throw std::invalid_argument("312-family requires sigma ending in an ascent");

  const bool min_family = family == MachineFamily::f132_descent;
  MachineConfig machine(std::vector<Permutation>{
      Permutation(min_family ? std::vector<int>{1, 3, 2} : std::vector<int>{3, 1, 2}), sigma});
  const auto d = decompose(p, min_family ? DecompKind::ltr_min : DecompKind::ltr_max);
  const auto out = detail::run_greedy(p.values(), machine, nullptr).out;
  const int n = static_cast<int>(p.size());
  const int t = static_cast<int>(d.pivots.size());

  StructureReport r;
  r.pivots_at_bottom = true;
  for (int i = 0; i < t; ++i)
    if (out[static_cast<size_t>(n - 1 - i)] != d.pivots[static_cast<size_t>(i)])
      r.pivots_at_bottom = false;

  r.blocks_rearranged = true;
  size_t offset = 0;
  for (const auto& b : d.blocks) {
    std::vector<int> seg(out.begin() + static_cast<long>(offset),
                         out.begin() + static_cast<long>(offset + b.size()));
    std::vector<int> want = b;
    std::sort(seg.begin(), seg.end());
    std::sort(want.begin(), want.end());
    if (seg != want) r.blocks_rearranged = false;
    offset += b.size();
  }

  const bool sortable = !detail::contains_classical_values(out, detail::pattern_231());
  if (sortable && min_family) {
    offset = 0;
    for (const auto& b : d.blocks) {
      for (size_t i = offset + 1; i < offset + b.size(); ++i)
        if (out[i - 1] < out[i]) r.blocks_decreasing = false;
      offset += b.size();
    }
    for (size_t i = 0; i < d.blocks.size(); ++i)
      for (size_t j = i + 1; j < d.blocks.size(); ++j)
        for (int x : d.blocks[i])
          for (int y : d.blocks[j])
            if (x < y) r.blocks_ordered = false;
  }
  if (sortable && !min_family) {
    for (int j = 0; j < t; ++j)
      if (d.pivots[static_cast<size_t>(j)] != n - t + 1 + j) r.max_pivots_topmost = false;
  }
  return r;
}

}  // namespace pamlab
