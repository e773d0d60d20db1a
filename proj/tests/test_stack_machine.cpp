#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "pamlab/stack_machine.hpp"

using namespace pamlab;

TEST_CASE("machine config parsing and validation") {
  const MachineConfig m = MachineConfig::parse("123,132");
  REQUIRE(m.forbidden.size() == 2);
  CHECK(m.forbidden[0] == Permutation({1, 2, 3}));
  CHECK(m.forbidden[1] == Permutation({1, 3, 2}));
  CHECK(m.literal() == "123,132");
  CHECK(MachineConfig::parse("21").literal() == "21");
  CHECK_THROWS_AS(MachineConfig::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(MachineConfig::parse("1"), std::invalid_argument);
  CHECK_THROWS_AS(MachineConfig::parse("2 2 1"), std::invalid_argument);
  CHECK_THROWS_AS(MachineConfig(std::vector<Permutation>{Permutation::identity(13)}),
                  std::invalid_argument);
  CHECK_NOTHROW(MachineConfig(std::vector<Permutation>{Permutation::identity(12)}));
}

TEST_CASE("classical 21 stack on 231") {
  const SortingTrace t = run_stack(parse_permutation("231"), MachineConfig::parse("21"));
  CHECK(t.operations == "POPPOO");
  REQUIRE(t.states.size() == 7);
  CHECK(t.output() == std::vector<int>{2, 1, 3});
  CHECK(t.states[0].out.empty());
  CHECK(t.states[0].stack.empty());
  CHECK(t.states[0].in == std::vector<int>{2, 3, 1});
  CHECK(t.states[2].out == std::vector<int>{2});
}

TEST_CASE("frozen outputs of small machines") {
  auto out = [](const char* machine, const char* perm) {
    return to_string(out_t(parse_permutation(perm), MachineConfig::parse(machine)));
  };
  CHECK(out("21", "231") == "213");
  CHECK(out("132,231", "231") == "312");
  CHECK(out("123,132", "2314") == "3412");
  CHECK(out("123,312", "231") == "132");
  CHECK(out("12", "312") == "321");
  CHECK(out("123,132", "12345") == "54321");
  CHECK(out("123,213", "2413") == "1342");
}

TEST_CASE("trace of 2314 through the 123,132 machine") {
  const SortingTrace t = run_stack(parse_permutation("2314"), MachineConfig::parse("123,132"));
  CHECK(t.operations == "PPOPPOOO");
  REQUIRE(t.states.size() == 9);
  CHECK(t.output() == std::vector<int>{3, 4, 1, 2});
  // the state right after the first pop
  CHECK(t.states[3].out == std::vector<int>{3});
  CHECK(t.states[3].stack == std::vector<int>{2});
  CHECK(t.states[3].in == std::vector<int>{1, 4});
}

TEST_CASE("trace renders as json") {
  const SortingTrace t = run_stack(parse_permutation("2314"), MachineConfig::parse("123,132"));
  const nlohmann::json j = trace_json(t);
  CHECK(j["machine"] == nlohmann::json::array({"123", "132"}));
  CHECK(j["input"] == "2314");
  CHECK(j["operations"] == "PPOPPOOO");
  CHECK(j["output"] == "3412");
  CHECK(j["sortable"] == false);
  REQUIRE(j["states"].is_array());
  REQUIRE(j["states"].size() == 9);
  CHECK(j["states"][0] == nlohmann::json({{"out", ""}, {"stack", ""}, {"in", "2314"}}));
  CHECK(j["states"][3] == nlohmann::json({{"out", "3"}, {"stack", "2"}, {"in", "14"}}));
}

TEST_CASE("trace renders as text") {
  const SortingTrace t = run_stack(parse_permutation("231"), MachineConfig::parse("132,231"));
  const std::string s = trace_text(t);
  CHECK(s.find("machine: 132,231\n") != std::string::npos);
  CHECK(s.find("input: 231\n") != std::string::npos);
  CHECK(s.find("(; ; 231)\n") != std::string::npos);
  CHECK(s.find("(3; 2; 1)\n") != std::string::npos);
  CHECK(s.find("operations: PPOPOO\n") != std::string::npos);
  CHECK(s.find("output: 312\n") != std::string::npos);
  CHECK(s.find("sortable: yes\n") != std::string::npos);
}

TEST_CASE("multi-digit runs render spaced") {
  const Permutation p = parse_permutation("10 9 8 7 6 5 4 3 2 1");
  const nlohmann::json j = trace_json(run_stack(p, MachineConfig::parse("21")));
  CHECK(j["input"] == "10 9 8 7 6 5 4 3 2 1");
  // the whole descent stacks up (top-to-bottom increasing) and pops sorted
  CHECK(j["output"] == "1 2 3 4 5 6 7 8 9 10");
}

TEST_CASE("machines run on partial permutations") {
  const PartialPermutation a = parse_partial_permutation("4 1 7 2 of 7");
  const PartialPermutation got = out_t(a, MachineConfig::parse("21"));
  CHECK(got == PartialPermutation({1, 4, 2, 7}, 7));
  CHECK(out_t(PartialPermutation({}, 3), MachineConfig::parse("21")) ==
        PartialPermutation({}, 3));
}

TEST_CASE("sortability is 231-avoidance of the machine output") {
  auto sortable = [](const char* machine, const char* perm) {
    return is_sortable(parse_permutation(perm), MachineConfig::parse(machine));
  };
  CHECK_FALSE(sortable("123,132", "2314"));
  CHECK_FALSE(sortable("132,231", "1324"));
  CHECK_FALSE(sortable("123,312", "132"));
  CHECK(sortable("123,312", "231"));
  CHECK(sortable("132,231", "231"));
  CHECK(sortable("21", "2413"));      // the composite machine is two stacks in series
  CHECK_FALSE(sortable("21", "23541"));
}

TEST_CASE("sort_series yields the identity exactly on sortable inputs") {
  CHECK(sort_series(parse_permutation("231"), MachineConfig::parse("132,231")) ==
        Permutation::identity(3));
  for (int n = 1; n <= 6; ++n) {
    const MachineConfig m = MachineConfig::parse("123,132");
    for_each_permutation(n, [&](const std::vector<int>& v) {
      const Permutation p = Permutation::unchecked(v);
      REQUIRE((sort_series(p, m) == Permutation::identity(n)) == is_sortable(p, m));
    });
  }
}

TEST_CASE("every run is a legal stack word and a rearrangement") {
  std::vector<MachineConfig> machines = {MachineConfig::parse("12"), MachineConfig::parse("21")};
  const auto s3 = all_permutations(3);
  for (size_t i = 0; i < s3.size(); ++i)
    for (size_t j = i + 1; j < s3.size(); ++j)
      machines.push_back(MachineConfig(std::vector<Permutation>{s3[i], s3[j]}));
  REQUIRE(machines.size() == 17);

  for (const auto& m : machines) {
    for (int n = 1; n <= 7; ++n) {
      for_each_permutation(n, [&](const std::vector<int>& v) {
        const SortingTrace t = run_stack(Permutation::unchecked(v), m);
        REQUIRE(t.operations.size() == 2 * static_cast<size_t>(n));
        int depth = 0;
        int pushes = 0;
        for (const char c : t.operations) {
          if (c == 'P') {
            ++depth;
            ++pushes;
          } else {
            REQUIRE(depth > 0);
            --depth;
          }
        }
        REQUIRE(depth == 0);
        REQUIRE(pushes == n);
        std::vector<int> sorted = t.output();
        std::sort(sorted.begin(), sorted.end());
        REQUIRE(sorted == Permutation::identity(n).values());
        // the stack never holds a forbidden pattern top-to-bottom
        for (const auto& st : t.states)
          for (const auto& pat : m.forbidden)
            REQUIRE_FALSE(detail::contains_classical_values(st.stack, pat.values()));
      });
    }
  }
}

TEST_CASE("pushes happen whenever no forbidden pattern would form") {
  // greedy law: at every state with remaining input, 'O' implies the push
  // would have created a forbidden stack
  const MachineConfig m = MachineConfig::parse("123,132");
  for_each_permutation(6, [&](const std::vector<int>& v) {
    const SortingTrace t = run_stack(Permutation::unchecked(v), m);
    for (size_t step = 0; step < t.operations.size(); ++step) {
      const auto& st = t.states[step];
      if (st.in.empty()) continue;
      std::vector<int> would = st.stack;  // top-to-bottom
      would.insert(would.begin(), st.in.front());
      bool forbidden = false;
      for (const auto& pat : m.forbidden)
        if (detail::contains_classical_values(would, pat.values())) forbidden = true;
      REQUIRE((t.operations[step] == 'O') == forbidden);
    }
  });
}
