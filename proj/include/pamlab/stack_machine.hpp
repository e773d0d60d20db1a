#pragma once

// Greedy simulation of a pattern-avoiding stack. The stack may never contain,
// reading top to bottom, an occurrence of any forbidden pattern; the machine
// pushes the next input element whenever that rule allows it and pops
// otherwise. A second, classical 21-avoiding stack in series sorts the result
// when possible: the input is sortable iff the first stack's output avoids 231.

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pamlab/patterns.hpp"
#include "pamlab/permutation.hpp"

namespace pamlab {

struct MachineConfig {
  std::vector<Permutation> forbidden;  // patterns read top-to-bottom in the stack

  MachineConfig() = default;

  explicit MachineConfig(std::vector<Permutation> patterns) : forbidden(std::move(patterns)) {
    if (forbidden.empty()) throw std::invalid_argument("machine needs at least one pattern");
    for (const auto& p : forbidden)
      if (p.size() < 2 || p.size() > 12)
        throw std::invalid_argument("forbidden patterns must have length in 2..12");
  }

  // "123,132" -> the {123,132}-avoiding stack.
  static MachineConfig parse(std::string_view literal) {
    std::vector<Permutation> pats;
    for (const auto& tok : detail::split_tokens(literal)) pats.push_back(parse_permutation(tok));
    return MachineConfig(std::move(pats));
  }

  std::string literal() const {
    std::string s;
    for (size_t i = 0; i < forbidden.size(); ++i) {
      if (i) s += ',';
      s += detail::format_values(forbidden[i].values(), true);
    }
    return s;
  }

  friend bool operator==(const MachineConfig& a, const MachineConfig& b) {
    return a.forbidden == b.forbidden;
  }
};

// One state of passing: output so far, stack content top-to-bottom, remaining
// input. A run of length n visits exactly 2n+1 states.
struct TraceState {
  std::vector<int> out;
  std::vector<int> stack;
  std::vector<int> in;
};

struct SortingTrace {
  MachineConfig machine;
  std::vector<int> input;
  std::vector<TraceState> states;
  std::string operations;  // 'P' = push, 'O' = pop

  const std::vector<int>& output() const { return states.back().out; }
};

namespace detail {

// Would pushing x create a forbidden occurrence? The content below already
// avoids every pattern, so any new occurrence must use x as its first letter
// read from the top; only those are scanned.
inline bool push_creates(const std::vector<int>& stack_bt, const std::vector<int>& pat,
                         int got, int prev_pos, std::array<int, 16>& vals) {
  const int m = static_cast<int>(pat.size());
  const int s = static_cast<int>(stack_bt.size());
  if (got == m) return true;
  // virtual position p in 1..s is stack_bt[s - p] (top-to-bottom below x)
  for (int p = prev_pos + 1; p <= s - (m - got) + 1; ++p) {
    const int v = stack_bt[static_cast<size_t>(s - p)];
    bool ok = true;
    for (int q = 0; q < got; ++q) {
      if ((vals[static_cast<size_t>(q)] < v) != (pat[static_cast<size_t>(q)] < pat[static_cast<size_t>(got)])) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    vals[static_cast<size_t>(got)] = v;
    if (push_creates(stack_bt, pat, got + 1, p, vals)) return true;
  }
  return false;
}

inline bool push_allowed(const std::vector<int>& stack_bt, int x, const MachineConfig& m) {
  std::array<int, 16> vals{};
  for (const auto& pat : m.forbidden) {
    const auto& pv = pat.values();
    if (pv.size() > stack_bt.size() + 1) continue;
    vals[0] = x;
    if (push_creates(stack_bt, pv, 1, 0, vals)) return false;
  }
  return true;
}

struct RawRun {
  std::vector<int> out;
  std::string ops;
};

inline RawRun run_greedy(const std::vector<int>& input, const MachineConfig& m,
                         SortingTrace* trace) {
  RawRun r;
  const size_t n = input.size();
  r.out.reserve(n);
  r.ops.reserve(2 * n);
  std::vector<int> stack;  // bottom-to-top
  stack.reserve(n);
  size_t next = 0;
  auto snapshot = [&] {
    if (!trace) return;
    TraceState st;
    st.out = r.out;
    st.stack.assign(stack.rbegin(), stack.rend());
    st.in.assign(input.begin() + static_cast<long>(next), input.end());
    trace->states.push_back(std::move(st));
  };
  snapshot();
  while (next < n || !stack.empty()) {
    if (next < n && push_allowed(stack, input[next], m)) {
      stack.push_back(input[next]);
      ++next;
      r.ops += 'P';
    } else {
      r.out.push_back(stack.back());
      stack.pop_back();
      r.ops += 'O';
    }
    snapshot();
  }
  if (trace) trace->operations = r.ops;
  return r;
}

inline const std::vector<int>& pattern_231() {
  static const std::vector<int> p = {2, 3, 1};
  return p;
}

inline bool sortable_values(const std::vector<int>& input, const MachineConfig& m) {
  return !contains_classical_values(run_greedy(input, m, nullptr).out, pattern_231());
}

}  // namespace detail

inline SortingTrace run_stack(const Permutation& input, const MachineConfig& machine) {
  SortingTrace t;
  t.machine = machine;
  t.input = input.values();
  detail::run_greedy(input.values(), machine, &t);
  return t;
}

inline SortingTrace run_stack(const PartialPermutation& input, const MachineConfig& machine) {
  SortingTrace t;
  t.machine = machine;
  t.input = input.values();
  detail::run_greedy(input.values(), machine, &t);
  return t;
}

inline Permutation out_t(const Permutation& input, const MachineConfig& machine) {
  return Permutation::unchecked(detail::run_greedy(input.values(), machine, nullptr).out);
}

inline PartialPermutation out_t(const PartialPermutation& input, const MachineConfig& machine) {
  return PartialPermutation::unchecked(detail::run_greedy(input.values(), machine, nullptr).out,
                                       input.ambient());
}

inline bool is_sortable(const Permutation& input, const MachineConfig& machine) {
  return detail::sortable_values(input.values(), machine);
}

// Output of the full two-stack machine: the 21-avoiding stack applied to
// out_t. Equals the identity exactly when the input is sortable.
inline Permutation sort_series(const Permutation& input, const MachineConfig& machine) {
  static const MachineConfig classical(std::vector<Permutation>{Permutation({2, 1})});
  return out_t(out_t(input, machine), classical);
}

// ---------------------------------------------------------------------------
// Trace rendering. Digit strings are compact when every value of the run is a
// single digit, space-separated otherwise.

inline nlohmann::json trace_json(const SortingTrace& t) {
  const bool compact = detail::all_single_digit(t.input);
  nlohmann::json j;
  j["machine"] = nlohmann::json::array();
  for (const auto& p : t.machine.forbidden)
    j["machine"].push_back(detail::format_values(p.values(), true));
  j["input"] = detail::format_values(t.input, compact);
  j["states"] = nlohmann::json::array();
  for (const auto& st : t.states) {
    j["states"].push_back({{"out", detail::format_values(st.out, compact)},
                           {"stack", detail::format_values(st.stack, compact)},
                           {"in", detail::format_values(st.in, compact)}});
  }
  j["operations"] = t.operations;
  j["output"] = detail::format_values(t.output(), compact);
  j["sortable"] = !detail::contains_classical_values(t.output(), detail::pattern_231());
  return j;
}

inline std::string trace_text(const SortingTrace& t) {
  const bool compact = detail::all_single_digit(t.input);
  std::string s;
  s += "machine: " + t.machine.literal() + "\n";
  s += "input: " + detail::format_values(t.input, compact) + "\n";
  for (const auto& st : t.states) {
    s += "(" + detail::format_values(st.out, compact) + "; " +
         detail::format_values(st.stack, compact) + "; " +
         detail::format_values(st.in, compact) + ")\n";
  }
  s += "operations: " + t.operations + "\n";
  s += "output: " + detail::format_values(t.output(), compact) + "\n";
  const bool sortable = !detail::contains_classical_values(t.output(), detail::pattern_231());
  s += std::string("sortable: ") + (sortable ? "yes" : "no") + "\n";
  return s;
}

}  // namespace pamlab
