// Counts sortable permutations for a few machines and prints the counts
// next to the reference sequences they are known to follow.

#include <iostream>

#include "pamlab/harness.hpp"

int main() {
  using namespace pamlab;

  struct Row {
    const char* machine;
    SequenceName reference;
    int offset;
  };
  const Row rows[] = {
      {"132,231", SequenceName::large_schroeder, 1},
      {"123,213", SequenceName::catalan, 0},
      {"123,132", SequenceName::catalan, 0},
      {"123,312", SequenceName::binomial_transform_catalan, 1},
  };

  const int n_max = 8;
  for (const Row& row : rows) {
    const MachineConfig machine = MachineConfig::parse(row.machine);
    std::cout << "machine {" << machine.literal() << "} vs " << sequence_name_str(row.reference)
              << "\n";
    for (int n = 1; n <= n_max; ++n) {
      const u64 got = count_sortable(machine, n);
      const u64 want = sequence_value(row.reference, n - row.offset);
      std::cout << "  n=" << n << "  " << got << (got == want ? "  (match)" : "  (MISMATCH)")
                << "\n";
    }
  }
  return 0;
}
