#pragma once

// Exhaustive sweeps: counting sortable permutations, distribution tables,
// reference-sequence comparison, the characterization cross-checks, and the
// bijection verifiers. The only concurrent code in the library lives here:
// S_n is partitioned by first element into n classes, workers run on
// immutable inputs, and results merge in class order, so every run is
// deterministic regardless of worker count.

#include <algorithm>
#include <future>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "pamlab/bijections.hpp"
#include "pamlab/characterizations.hpp"
#include "pamlab/patterns.hpp"
#include "pamlab/permutation.hpp"
#include "pamlab/sequences.hpp"
#include "pamlab/stack_machine.hpp"

namespace pamlab {

struct HarnessOptions {
  int max_n = 11;        // refuse larger sweeps unless the caller raises the cap
  unsigned threads = 0;  // 0 = hardware concurrency
};

namespace detail {

inline unsigned worker_count(const HarnessOptions& opt) {
  if (opt.threads) return opt.threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Applies fn to every first-element class of S_n and merges the returned
// values in class order. fn: (int first) -> R.
template <class R, class Fn>
inline std::vector<R> map_first_classes(int n, unsigned threads, Fn&& fn) {
  std::vector<R> results;
  results.reserve(static_cast<size_t>(n));
  if (threads <= 1 || n <= 1) {
    for (int first = 1; first <= n; ++first) results.push_back(fn(first));
    return results;
  }
  std::vector<std::future<R>> futures;
  futures.reserve(static_cast<size_t>(n));
  for (int first = 1; first <= n; ++first)
    futures.push_back(std::async(std::launch::async, fn, first));
  for (auto& f : futures) results.push_back(f.get());
  return results;
}

}  // namespace detail

inline u64 count_sortable(const MachineConfig& machine, int n, const HarnessOptions& opt = {}) {
  if (n < 0) throw std::invalid_argument("negative length");
  if (n > opt.max_n)
    throw std::out_of_range("length exceeds the configured enumeration cap of " +
                            std::to_string(opt.max_n));
  if (n == 0) return 1;  // the empty permutation sorts trivially
  auto per_class = detail::map_first_classes<u64>(
      n, detail::worker_count(opt), [&machine, n](int first) {
        u64 c = 0;
        for_each_permutation_with_first(n, first, [&](const std::vector<int>& v) {
          if (detail::sortable_values(v, machine)) ++c;
        });
        return c;
      });
  u64 total = 0;
  for (u64 c : per_class) total += c;
  return total;
}

// ---------------------------------------------------------------------------
// Count tables and reference comparison.

struct CountRow {
  int n = 0;
  int k = 0;  // first element; 0 on aggregate rows
  u64 count = 0;
  std::optional<u64> reference_value;
  std::string verdict;  // "match" / "mismatch", empty without a reference
};

struct CountTable {
  MachineConfig machine;
  bool by_first = false;
  std::vector<CountRow> rows;
  std::optional<SequenceName> reference;
  int offset = 0;

  bool all_match() const {
    for (const auto& r : rows)
      if (r.verdict == "mismatch") return false;
    return true;
  }
};

inline CountTable count_table(const MachineConfig& machine, int n_max, bool by_first,
                              const HarnessOptions& opt = {}) {
  if (n_max < 1) throw std::invalid_argument("n_max must be positive");
  if (n_max > opt.max_n)
    throw std::out_of_range("length exceeds the configured enumeration cap of " +
                            std::to_string(opt.max_n));
  CountTable t;
  t.machine = machine;
  t.by_first = by_first;
  for (int n = 1; n <= n_max; ++n) {
    auto per_class = detail::map_first_classes<u64>(
        n, detail::worker_count(opt), [&machine, n](int first) {
          u64 c = 0;
          for_each_permutation_with_first(n, first, [&](const std::vector<int>& v) {
            if (detail::sortable_values(v, machine)) ++c;
          });
          return c;
        });
    if (by_first) {
      for (int k = 1; k <= n; ++k)
        t.rows.push_back(CountRow{n, k, per_class[static_cast<size_t>(k) - 1], std::nullopt, ""});
    } else {
      u64 total = 0;
      for (u64 c : per_class) total += c;
      t.rows.push_back(CountRow{n, 0, total, std::nullopt, ""});
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Reports: one line per executed check.

struct CheckLine {
  std::string name;
  int n = 0;
  bool pass = false;
  u64 checked = 0;
  std::string detail;  // first counterexample or a short note
};

struct Report {
  std::string title;
  std::vector<CheckLine> lines;

  bool pass() const {
    for (const auto& l : lines)
      if (!l.pass) return false;
    return true;
  }

  std::string to_text() const {
    std::ostringstream os;
    os << title << "\n";
    for (const auto& l : lines) {
      os << (l.pass ? "  ok   " : "  FAIL ") << l.name << " n=" << l.n
         << " checked=" << l.checked;
      if (!l.detail.empty()) os << " [" << l.detail << "]";
      os << "\n";
    }
    os << "RESULT: " << (pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
  }
};

// Stamps per-row verdicts against the named sequence. Row n is compared with
// sequence index n - offset; by-first tables compare against the triangle
// cell (n - offset, k).
inline Report compare_sequence(CountTable& table, SequenceName reference, int offset) {
  table.reference = reference;
  table.offset = offset;
  Report rep;
  rep.title = "counts for machine {" + table.machine.literal() + "} vs " +
              sequence_name_str(reference);
  for (auto& row : table.rows) {
    const int idx = row.n - offset;
    const u64 expect = reference == SequenceName::catalan_triangle
                           ? sequence_value(reference, idx, row.k)
                           : sequence_value(reference, idx);
    row.reference_value = expect;
    row.verdict = (row.count == expect) ? "match" : "mismatch";
    CheckLine line;
    line.name = table.by_first ? ("n=" + std::to_string(row.n) + " k=" + std::to_string(row.k))
                               : ("n=" + std::to_string(row.n));
    line.n = row.n;
    line.pass = row.count == expect;
    line.checked = 1;
    if (!line.pass)
      line.detail = "count " + std::to_string(row.count) + " != " + std::to_string(expect);
    rep.lines.push_back(std::move(line));
  }
  return rep;
}

inline std::string to_csv(const CountTable& t) {
  std::ostringstream os;
  os << (t.by_first ? "n,k,count,reference,verdict" : "n,count,reference,verdict") << "\n";
  const std::string ref = t.reference ? sequence_name_str(*t.reference) : "";
  for (const auto& r : t.rows) {
    os << r.n << ",";
    if (t.by_first) os << r.k << ",";
    os << r.count << "," << ref << "," << r.verdict << "\n";
  }
  return os.str();
}

inline nlohmann::json to_json(const CountTable& t) {
  nlohmann::json j;
  j["machine"] = t.machine.literal();
  j["by_first"] = t.by_first;
  j["reference"] = t.reference ? nlohmann::json(sequence_name_str(*t.reference)) : nlohmann::json();
  j["offset"] = t.offset;
  j["rows"] = nlohmann::json::array();
  for (const auto& r : t.rows) {
    nlohmann::json row;
    row["n"] = r.n;
    if (t.by_first) row["k"] = r.k;
    row["count"] = r.count;
    if (r.reference_value) row["reference_value"] = *r.reference_value;
    if (!r.verdict.empty()) row["verdict"] = r.verdict;
    j["rows"].push_back(std::move(row));
  }
  return j;
}

// ---------------------------------------------------------------------------
// Master cross-validation: the simulation verdict against every published
// criterion for the pair.

inline Report verify_characterization(PairId pair, int n_max, const HarnessOptions& opt = {}) {
  if (!has_pattern_characterization(pair))
    throw std::invalid_argument("pair " + pair_literal(pair) + " has no non-simulation criterion");
  if (n_max > opt.max_n)
    throw std::out_of_range("length exceeds the configured enumeration cap of " +
                            std::to_string(opt.max_n));
  const MachineConfig machine = machine_for(pair);

  struct Pred {
    std::string name;
    bool (*fn)(const Permutation&, PairId);
  };
  std::vector<Pred> preds;
  preds.push_back({"patterns", [](const Permutation& p, PairId pr) {
                     return sortable_by_patterns(p, pr);
                   }});
  if (pair == PairId::p132_231)
    preds.push_back({"blocks", [](const Permutation& p, PairId) {
                       return sortable_by_blocks_132_231(p);
                     }});
  if (pair == PairId::p123_312)
    preds.push_back({"conditions", [](const Permutation& p, PairId) {
                       return four_conditions_123_312(p);
                     }});

  Report rep;
  rep.title = "simulation vs characterizations for pair (" + pair_literal(pair) + ")";
  for (int n = 1; n <= n_max; ++n) {
    struct ClassResult {
      u64 checked = 0;
      std::vector<u64> mismatches;
      std::vector<std::string> first_cex;
    };
    auto per_class = detail::map_first_classes<ClassResult>(
        n, detail::worker_count(opt), [&](int first) {
          ClassResult cr;
          cr.mismatches.assign(preds.size(), 0);
          cr.first_cex.assign(preds.size(), "");
          for_each_permutation_with_first(n, first, [&](const std::vector<int>& v) {
            ++cr.checked;
            const Permutation p = Permutation::unchecked(v);
            const bool sim = detail::sortable_values(v, machine);
            for (size_t q = 0; q < preds.size(); ++q) {
              if (preds[q].fn(p, pair) != sim) {
                if (cr.mismatches[q] == 0) cr.first_cex[q] = to_string(p);
                ++cr.mismatches[q];
              }
            }
          });
          return cr;
        });
    for (size_t q = 0; q < preds.size(); ++q) {
      CheckLine line;
      line.name = preds[q].name;
      line.n = n;
      u64 mism = 0;
      for (const auto& cr : per_class) {
        line.checked += cr.checked;
        mism += cr.mismatches[q];
        if (line.detail.empty() && !cr.first_cex[q].empty())
          line.detail = "counterexample " + cr.first_cex[q];
      }
      line.pass = mism == 0;
      if (!line.pass) line.detail += " (" + std::to_string(mism) + " mismatches)";
      rep.lines.push_back(std::move(line));
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Bijection verifiers.

enum class BijectionKind { hat_roundtrip, alpha, phi, triangle };

inline BijectionKind parse_bijection_kind(std::string_view s) {
  if (s == "hat-roundtrip") return BijectionKind::hat_roundtrip;
  if (s == "alpha") return BijectionKind::alpha;
  if (s == "phi") return BijectionKind::phi;
  if (s == "triangle") return BijectionKind::triangle;
  throw std::invalid_argument("unknown bijection check '" + std::string(s) + "'");
}

// Image of S_n under the machine has n! distinct members. Outputs are packed
// four bits per value, so this covers n <= 10 comfortably (memory bound).
inline bool is_out_bijective(const MachineConfig& machine, int n) {
  if (n < 0 || n > 10) throw std::out_of_range("is_out_bijective supports n <= 10");
  std::vector<u64> packed;
  packed.reserve(static_cast<size_t>(factorial(n)));
  for_each_permutation(n, [&](const std::vector<int>& v) {
    const auto out = detail::run_greedy(v, machine, nullptr).out;
    u64 key = 0;
    for (int x : out) key = (key << 4) | static_cast<u64>(x);
    packed.push_back(key);
  });
  std::sort(packed.begin(), packed.end());
  return std::adjacent_find(packed.begin(), packed.end()) == packed.end();
}

inline Report verify_bijection(BijectionKind kind, int n_max, const HarnessOptions& opt = {}) {
  if (n_max > opt.max_n)
    throw std::out_of_range("length exceeds the configured enumeration cap of " +
                            std::to_string(opt.max_n));
  Report rep;
  switch (kind) {
    case BijectionKind::hat_roundtrip: {
      rep.title = "out over {sigma, sigma-hat} machines: roundtrip and bijectivity";
      const auto sigmas = all_permutations(3);
      for (int n = 1; n <= n_max; ++n) {
        for (const auto& sigma : sigmas) {
          CheckLine line;
          line.name = "roundtrip sigma=" + to_string(sigma);
          line.n = n;
          line.pass = true;
          const MachineConfig machine = hat_machine(sigma);
          for_each_permutation(n, [&](const std::vector<int>& v) {
            ++line.checked;
            const Permutation p = Permutation::unchecked(v);
            if (!line.pass) return;
            if (inverse_out_hat(out_t(p, machine), sigma) != p) {
              line.pass = false;
              line.detail = "counterexample " + to_string(p);
            }
          });
          rep.lines.push_back(std::move(line));
        }
        for (const auto& sigma : sigmas) {
          CheckLine line;
          line.name = "image-distinct sigma=" + to_string(sigma);
          line.n = n;
          line.checked = factorial(n);
          line.pass = is_out_bijective(hat_machine(sigma), n);
          if (!line.pass) line.detail = "collision in image";
          rep.lines.push_back(std::move(line));
        }
      }
      break;
    }
    case BijectionKind::alpha: {
      rep.title = "alpha: [132-avoiders of length n vs partial permutations of n-1";
      for (int n = 1; n <= n_max; ++n) {
        CheckLine line;
        line.name = "alpha";
        line.n = n;
        line.pass = true;
        static const Permutation p132({1, 3, 2});
        u64 avoiders = 0;
        for_each_permutation(n, [&](const std::vector<int>& v) {
          const Permutation p = Permutation::unchecked(v);
          if (contains_anchored(p, p132)) return;
          ++avoiders;
          ++line.checked;
          if (!line.pass) return;
          if (alpha_inverse(alpha(p)) != p) {
            line.pass = false;
            line.detail = "roundtrip counterexample " + to_string(p);
          }
        });
        u64 partials = 0;
        for_each_partial_permutation(n - 1, [&](const std::vector<int>& v) {
          ++partials;
          ++line.checked;
          if (!line.pass) return;
          const auto a = PartialPermutation::unchecked(v, n - 1);
          if (alpha(alpha_inverse(a)) != a) {
            line.pass = false;
            line.detail = "inverse roundtrip counterexample " + to_string(a);
          }
        });
        u64 expect = 0;
        for (int k = 0; k <= n - 1; ++k) expect += binomial(n - 1, k) * factorial(k);
        if (line.pass && (avoiders != partials || avoiders != expect)) {
          line.pass = false;
          line.detail = "cardinalities " + std::to_string(avoiders) + " vs " +
                        std::to_string(partials) + " vs " + std::to_string(expect);
        }
        rep.lines.push_back(std::move(line));
      }
      break;
    }
    case BijectionKind::phi: {
      rep.title = "phi: Av(31|2, 2~13~) vs Av(213) over partial permutations";
      for (int n = 0; n <= n_max; ++n) {
        CheckLine line;
        line.name = "phi";
        line.n = n;
        line.pass = true;
        std::vector<PartialPermutation> domain, codomain;
        for_each_partial_permutation(n, [&](const std::vector<int>& v) {
          const auto a = PartialPermutation::unchecked(v, n);
          if (in_phi_domain(a)) domain.push_back(a);
          if (detail::avoids_213_values(v)) codomain.push_back(a);
        });
        std::vector<PartialPermutation> image;
        image.reserve(domain.size());
        for (const auto& a : domain) {
          ++line.checked;
          const auto q = phi(a);
          image.push_back(q);
          if (!line.pass) continue;
          if (!detail::avoids_213_values(q.values())) {
            line.pass = false;
            line.detail = "image off codomain at " + to_string(a);
          } else if (phi_inverse(q) != a) {
            line.pass = false;
            line.detail = "roundtrip counterexample " + to_string(a);
          }
        }
        std::sort(image.begin(), image.end());
        if (line.pass && std::adjacent_find(image.begin(), image.end()) != image.end()) {
          line.pass = false;
          line.detail = "phi not injective";
        }
        std::sort(codomain.begin(), codomain.end());
        if (line.pass && image != codomain) {
          line.pass = false;
          line.detail = "phi not surjective: |image|=" + std::to_string(image.size()) +
                        " |codomain|=" + std::to_string(codomain.size());
        }
        rep.lines.push_back(std::move(line));
      }
      break;
    }
    case BijectionKind::triangle: {
      rep.title = "triangle refinement: class counts, swap and delete roundtrips";
      for (int n = 2; n <= n_max; ++n) {
        // sortable members of length n and n-1, grouped by first element
        std::vector<std::vector<Permutation>> a_n(static_cast<size_t>(n) + 1);
        std::vector<std::vector<Permutation>> a_prev(static_cast<size_t>(n) + 1);
        for_each_permutation(n, [&](const std::vector<int>& v) {
          const Permutation p = Permutation::unchecked(v);
          if (detail::sortable_123_132(p)) a_n[static_cast<size_t>(v[0])].push_back(p);
        });
        for_each_permutation(n - 1, [&](const std::vector<int>& v) {
          const Permutation p = Permutation::unchecked(v);
          if (detail::sortable_123_132(p)) a_prev[static_cast<size_t>(v[0])].push_back(p);
        });
        for (int k = 2; k <= n; ++k) {
          CheckLine line;
          line.name = "triangle k=" + std::to_string(k);
          line.n = n;
          line.pass = true;
          std::vector<Permutation> a1, a2;
          for (const auto& p : a_n[static_cast<size_t>(k)]) {
            ++line.checked;
            (classify_triangle(p).kind == TriangleClass::Kind::A1 ? a1 : a2).push_back(p);
          }
          // first element n admits no larger value, so its second class is empty
          const u64 want_a1 = catalan_triangle_value(n, k - 1);
          const u64 want_a2 = (k <= n - 1) ? catalan_triangle_value(n - 1, k) : 0;
          if (a1.size() != want_a1 || a2.size() != want_a2) {
            line.pass = false;
            line.detail = "class sizes " + std::to_string(a1.size()) + "/" +
                          std::to_string(a2.size()) + " want " + std::to_string(want_a1) + "/" +
                          std::to_string(want_a2);
          }
          std::vector<Permutation> swapped;
          for (const auto& p : a1) {
            const auto s = triangle_swap(p);
            if (line.pass && (s[0] != k - 1 || !detail::sortable_123_132(s))) {
              line.pass = false;
              line.detail = "swap image off target at " + to_string(p);
            }
            swapped.push_back(s);
          }
          std::sort(swapped.begin(), swapped.end());
          if (line.pass && std::adjacent_find(swapped.begin(), swapped.end()) != swapped.end()) {
            line.pass = false;
            line.detail = "swap not injective";
          }
          for (const auto& p : a2) {
            if (!line.pass) break;
            const auto dd = triangle_delete(p);
            if (dd[0] != k || !detail::sortable_123_132(dd)) {
              line.pass = false;
              line.detail = "delete image off target at " + to_string(p);
            } else if (triangle_delete_inverse(dd) != p) {
              line.pass = false;
              line.detail = "delete roundtrip counterexample " + to_string(p);
            }
          }
          for (const auto& p : a_prev[static_cast<size_t>(k)]) {
            if (!line.pass) break;
            ++line.checked;
            const auto up = triangle_delete_inverse(p);
            if (classify_triangle(up).kind != TriangleClass::Kind::A2 ||
                triangle_delete(up) != p) {
              line.pass = false;
              line.detail = "insert roundtrip counterexample " + to_string(p);
            }
          }
          rep.lines.push_back(std::move(line));
        }
      }
      break;
    }
  }
  return rep;
}

}  // namespace pamlab
