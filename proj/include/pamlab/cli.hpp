#pragma once

// Command line front end. run_cli is a plain function over streams so the
// whole surface stays testable in process; tools/pamlab.cpp is a two-line
// main around it.
//
// Exit codes: 0 success (for `sortable` and `trace`, any verdict counts as
// success), 1 a checked claim failed (count mismatch, verification failure,
// oracle disagreement), 2 usage or argument errors.

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pamlab/bijections.hpp"
#include "pamlab/characterizations.hpp"
#include "pamlab/harness.hpp"
#include "pamlab/pattern_oracle.hpp"
#include "pamlab/patterns.hpp"
#include "pamlab/permutation.hpp"
#include "pamlab/sequences.hpp"
#include "pamlab/stack_machine.hpp"

namespace pamlab {

namespace detail {

// same forbidden set, any listing order
inline bool same_machine(const MachineConfig& a, const MachineConfig& b) {
  auto key = [](const MachineConfig& m) {
    std::vector<std::vector<int>> k;
    for (const auto& p : m.forbidden) k.push_back(p.values());
    std::sort(k.begin(), k.end());
    return k;
  };
  return key(a) == key(b);
}

inline std::optional<PairId> pair_of_machine(const MachineConfig& m) {
  static const PairId all[] = {PairId::p132_231, PairId::p123_213, PairId::p132_312,
                               PairId::p231_321, PairId::p123_132, PairId::p123_312};
  for (PairId p : all)
    if (same_machine(m, machine_for(p))) return p;
  return std::nullopt;
}

struct AutoReference {
  SequenceName name;
  int offset;
};

inline std::optional<AutoReference> auto_reference(const MachineConfig& m, bool by_first) {
  const auto pair = pair_of_machine(m);
  if (!pair) return std::nullopt;
  switch (*pair) {
    case PairId::p132_231: return AutoReference{SequenceName::large_schroeder, 1};
    case PairId::p123_213:
    case PairId::p132_312:
    case PairId::p231_321: return AutoReference{SequenceName::catalan, 0};
    case PairId::p123_132:
      return by_first ? AutoReference{SequenceName::catalan_triangle, 0}
                      : AutoReference{SequenceName::catalan, 0};
    case PairId::p123_312: return AutoReference{SequenceName::binomial_transform_catalan, 1};
  }
  return std::nullopt;
}

inline int default_offset(SequenceName s) {
  switch (s) {
    case SequenceName::large_schroeder:
    case SequenceName::binomial_transform_catalan: return 1;
    case SequenceName::catalan:
    case SequenceName::catalan_triangle: return 0;
  }
  return 0;
}

inline int env_max_n() {
  const char* raw = std::getenv("PAMLAB_MAX_N");
  if (!raw) return 11;
  try {
    size_t used = 0;
    const int v = std::stoi(raw, &used);
    if (used != std::string(raw).size() || v < 0) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("PAMLAB_MAX_N must be a nonnegative integer, got '" +
                                std::string(raw) + "'");
  }
}

inline int emit_count_table(CountTable& table, std::optional<SequenceName> reference, int offset,
                            const std::string& format, std::ostream& out) {
  bool ok = true;
  if (reference) {
    const Report rep = compare_sequence(table, *reference, offset);
    ok = rep.pass();
  }
  if (format == "json")
    out << to_json(table).dump(2) << "\n";
  else
    out << to_csv(table);
  return ok ? 0 : 1;
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"pattern-avoiding two-stack sorting machines"};
  app.name("pamlab");
  app.require_subcommand(1);

  std::string machine_str, perm_str, pair_str, check_str, pattern_str, reference_str;
  std::string format = "text";
  int max_n = -1;
  int offset = -1;
  bool by_first = false;

  auto* trace = app.add_subcommand("trace", "run the two-stack machine and print every state");
  trace->add_option("--machine", machine_str, "forbidden patterns, e.g. 123,132")->required();
  trace->add_option("--perm", perm_str, "input permutation")->required();
  trace->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* sortable = app.add_subcommand("sortable", "decide whether the machine sorts the input");
  sortable->add_option("--machine", machine_str, "forbidden patterns")->required();
  sortable->add_option("--perm", perm_str, "input permutation")->required();

  auto* count = app.add_subcommand("count", "count sortable permutations per length");
  count->add_option("--machine", machine_str, "forbidden patterns")->required();
  count->add_option("--max-n", max_n, "largest length to enumerate")->required();
  count->add_flag("--by-first", by_first, "split each length by first element");
  count->add_option("--reference", reference_str, "sequence to compare against");
  count->add_option("--offset", offset, "row n compares with sequence index n-offset");
  count->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* distribution =
      app.add_subcommand("distribution", "per-first-element counts for each length");
  distribution->add_option("--machine", machine_str, "forbidden patterns")->required();
  distribution->add_option("--max-n", max_n, "largest length to enumerate")->required();
  distribution->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* verify = app.add_subcommand(
      "verify", "cross-check the simulation against every published criterion for a pair");
  verify->add_option("--pair", pair_str, "machine pair, e.g. 132,231")->required();
  verify->add_option("--max-n", max_n, "largest length to sweep (default 9)");

  auto* bijection = app.add_subcommand("bijection", "verify one of the structural bijections");
  bijection
      ->add_option("--check", check_str, "hat-roundtrip, alpha, phi, or triangle")
      ->required();
  bijection->add_option("--max-n", max_n, "largest size to sweep");

  auto* oracle_cmd = app.add_subcommand(
      "oracle", "compare the fast containment test with the brute-force one");
  oracle_cmd->add_option("--pattern", pattern_str, "pattern literal, e.g. [24^13 or 31|2")
      ->required();
  oracle_cmd->add_option("--perm", perm_str, "host permutation; use 'a b c of N' for partial")
      ->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    HarnessOptions opt;
    opt.max_n = detail::env_max_n();

    if (*trace) {
      const MachineConfig machine = MachineConfig::parse(machine_str);
      const Permutation p = parse_permutation(perm_str);
      const SortingTrace tr = run_stack(p, machine);
      if (format == "json")
        out << trace_json(tr).dump(2) << "\n";
      else
        out << trace_text(tr);
      return 0;
    }

    if (*sortable) {
      const MachineConfig machine = MachineConfig::parse(machine_str);
      const Permutation p = parse_permutation(perm_str);
      if (is_sortable(p, machine)) {
        out << "SORTABLE\n";
        return 0;
      }
      const auto pair = detail::pair_of_machine(machine);
      if (pair && has_pattern_characterization(*pair)) {
        if (const auto spec = first_violated_pattern(p, *pair)) {
          out << "NOT SORTABLE (contains " << spec->literal() << ")\n";
          return 0;
        }
      }
      out << "NOT SORTABLE (output contains 231)\n";
      return 0;
    }

    if (*count) {
      const MachineConfig machine = MachineConfig::parse(machine_str);
      CountTable table = count_table(machine, max_n, by_first, opt);
      std::optional<SequenceName> reference;
      int off = 0;
      if (!reference_str.empty()) {
        reference = parse_sequence_name(reference_str);
        off = offset >= 0 ? offset : detail::default_offset(*reference);
      } else if (const auto aut = detail::auto_reference(machine, by_first)) {
        reference = aut->name;
        off = offset >= 0 ? offset : aut->offset;
      }
      if (format == "text") format = "csv";
      return detail::emit_count_table(table, reference, off, format, out);
    }

    if (*distribution) {
      const MachineConfig machine = MachineConfig::parse(machine_str);
      CountTable table = count_table(machine, max_n, true, opt);
      const auto aut = detail::auto_reference(machine, true);
      std::optional<SequenceName> reference;
      int off = 0;
      if (aut && aut->name == SequenceName::catalan_triangle) {
        reference = aut->name;
        off = aut->offset;
      }
      if (format == "text") format = "csv";
      return detail::emit_count_table(table, reference, off, format, out);
    }

    if (*verify) {
      const PairId pair = parse_pair(pair_str);
      const int n_max = max_n > 0 ? max_n : 9;
      const Report rep = verify_characterization(pair, n_max, opt);
      out << rep.to_text();
      return rep.pass() ? 0 : 1;
    }

    if (*bijection) {
      const BijectionKind kind = parse_bijection_kind(check_str);
      int n_max = max_n;
      if (n_max <= 0) {
        switch (kind) {
          case BijectionKind::hat_roundtrip: n_max = 7; break;
          case BijectionKind::alpha: n_max = 8; break;
          case BijectionKind::phi: n_max = 6; break;
          case BijectionKind::triangle: n_max = 7; break;
        }
      }
      const Report rep = verify_bijection(kind, n_max, opt);
      out << rep.to_text();
      return rep.pass() ? 0 : 1;
    }

    if (*oracle_cmd) {
      const PatternSpec spec = parse_pattern(pattern_str);
      const bool partial_host = perm_str.find("of") != std::string::npos;
      bool fast = false, brute = false;
      if (spec.kind() == PatternKind::special) {
        // specials read gaps, so a bare host means the full partial permutation
        PartialPermutation host = PartialPermutation::unchecked({}, 0);
        if (partial_host) {
          host = parse_partial_permutation(perm_str);
        } else {
          const Permutation full = parse_permutation(perm_str);
          host = PartialPermutation(full.values(), static_cast<int>(full.size()));
        }
        fast = contains(host, spec);
        brute = oracle::contains(host, spec);
      } else if (partial_host) {
        const PartialPermutation host = parse_partial_permutation(perm_str);
        fast = contains(host, spec);
        brute = oracle::contains(host, spec);
      } else {
        const Permutation host = parse_permutation(perm_str);
        fast = contains(host, spec);
        brute = oracle::contains(host, spec);
      }
      out << "pattern: " << spec.literal() << "\n";
      out << "fast:  " << (fast ? "contains" : "avoids") << "\n";
      out << "brute: " << (brute ? "contains" : "avoids") << "\n";
      out << "agreement: " << (fast == brute ? "yes" : "no") << "\n";
      return fast == brute ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace pamlab
