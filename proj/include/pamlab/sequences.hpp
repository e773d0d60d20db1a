#pragma once

// Reference integer sequences, embedded as static prefixes so every
// comparison is offline and deterministic. Counts are exact in 64 bits:
// nothing in scope exceeds 12! or the tabulated prefixes.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pamlab/permutation.hpp"

namespace pamlab {

enum class SequenceName {
  catalan,
  large_schroeder,
  binomial_transform_catalan,
  catalan_triangle,
};

inline std::string sequence_name_str(SequenceName s) {
  switch (s) {
    case SequenceName::catalan: return "catalan";
    case SequenceName::large_schroeder: return "large-schroeder";
    case SequenceName::binomial_transform_catalan: return "binomial-transform-catalan";
    case SequenceName::catalan_triangle: return "catalan-triangle";
  }
  throw std::logic_error("unreachable");
}

inline SequenceName parse_sequence_name(std::string_view s) {
  if (s == "catalan") return SequenceName::catalan;
  if (s == "large-schroeder") return SequenceName::large_schroeder;
  if (s == "binomial-transform-catalan") return SequenceName::binomial_transform_catalan;
  if (s == "catalan-triangle") return SequenceName::catalan_triangle;
  throw std::invalid_argument("unknown sequence name '" + std::string(s) + "'");
}

// Exact for every (n, k) with n <= 62 that fits in 64 bits at each step;
// the quantities used here stay far below that.
inline u64 binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (n > 62) throw std::out_of_range("binomial argument too large for exact 64-bit evaluation");
  if (k > n - k) k = n - k;
  u64 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<u64>(n - k + i) / static_cast<u64>(i);
  }
  return r;
}

inline u64 catalan_number(int n) {
  if (n < 0) throw std::out_of_range("catalan index must be nonnegative");
  if (n > 30) throw std::out_of_range("catalan index beyond exact 64-bit range supported here");
  return binomial(2 * n, n) / static_cast<u64>(n + 1);
}

// Large Schroeder numbers, first 15 terms (index 0 = 1).
inline constexpr u64 kLargeSchroeder[15] = {
    1,       2,        6,        22,        90,
    394,     1806,     8558,     41586,     206098,
    1037718, 5293446,  27297738, 142078746, 745387038,
};

inline u64 schroeder_number(int n) {
  if (n < 0 || n >= 15)
    throw std::out_of_range("large-schroeder table covers indices 0..14");
  return kLargeSchroeder[n];
}

inline u64 binomial_transform_catalan(int n) {
  if (n < 0) throw std::out_of_range("index must be nonnegative");
  if (n > 25) throw std::out_of_range("binomial-transform-catalan index beyond supported range");
  u64 s = 0;
  for (int k = 0; k <= n; ++k) s += binomial(n, k) * catalan_number(k);
  return s;
}

// Triangle rows 1..15; row n lists a(n,1) .. a(n,n). Column k of the printed
// table is row n here. Recurrence: a(n,k) = a(n,k-1) + a(n-1,k), a(n,1) = 1,
// a(n,n) = a(n,n-1) = catalan(n-1).
inline const std::vector<std::vector<u64>>& catalan_triangle_rows() {
  static const std::vector<std::vector<u64>> rows = {
      {},  // index 0 unused
      {1},
      {1, 1},
      {1, 2, 2},
      {1, 3, 5, 5},
      {1, 4, 9, 14, 14},
      {1, 5, 14, 28, 42, 42},
      {1, 6, 20, 48, 90, 132, 132},
      {1, 7, 27, 75, 165, 297, 429, 429},
      {1, 8, 35, 110, 275, 572, 1001, 1430, 1430},
      {1, 9, 44, 154, 429, 1001, 2002, 3432, 4862, 4862},
      {1, 10, 54, 208, 637, 1638, 3640, 7072, 11934, 16796, 16796},
      {1, 11, 65, 273, 910, 2548, 6188, 13260, 25194, 41990, 58786, 58786},
      {1, 12, 77, 350, 1260, 3808, 9996, 23256, 48450, 90440, 149226, 208012, 208012},
      {1, 13, 90, 440, 1700, 5508, 15504, 38760, 87210, 177650, 326876, 534888, 742900, 742900},
      {1, 14, 104, 544, 2244, 7752, 23256, 62016, 149226, 326876, 653752, 1188640, 1931540,
       2674440, 2674440},
  };
  return rows;
}

inline u64 catalan_triangle_value(int n, int k) {
  const auto& rows = catalan_triangle_rows();
  if (n < 1 || n >= static_cast<int>(rows.size()))
    throw std::out_of_range("catalan-triangle table covers n = 1..15");
  if (k < 1 || k > n) throw std::out_of_range("catalan-triangle needs 1 <= k <= n");
  return rows[static_cast<size_t>(n)][static_cast<size_t>(k) - 1];
}

inline u64 sequence_value(SequenceName name, int n, std::optional<int> k = std::nullopt) {
  switch (name) {
    case SequenceName::catalan: return catalan_number(n);
    case SequenceName::large_schroeder: return schroeder_number(n);
    case SequenceName::binomial_transform_catalan: return binomial_transform_catalan(n);
    case SequenceName::catalan_triangle:
      if (!k) throw std::invalid_argument("catalan-triangle requires the secondary index k");
      return catalan_triangle_value(n, *k);
  }
  throw std::logic_error("unreachable");
}

}  // namespace pamlab
