// Runs one permutation through a machine and prints every intermediate
// state, first as plain text and then as the JSON document the CLI emits.

#include <iostream>

#include "pamlab/stack_machine.hpp"

int main() {
  using namespace pamlab;

  const MachineConfig machine = MachineConfig::parse("123,132");
  const Permutation input = parse_permutation("2314");

  const SortingTrace trace = run_stack(input, machine);
  std::cout << trace_text(trace) << "\n";
  std::cout << trace_json(trace).dump(2) << "\n";

  // the full pipeline appends the classical stack pass
  std::cout << "\nafter both stacks: " << to_string(sort_series(input, machine)) << "\n";
  return 0;
}
