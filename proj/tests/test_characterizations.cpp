#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "pamlab/characterizations.hpp"

using namespace pamlab;

namespace {

const std::vector<PairId> all_pairs = {PairId::p132_231, PairId::p123_213, PairId::p132_312,
                                       PairId::p231_321, PairId::p123_132, PairId::p123_312};

}  // namespace

TEST_CASE("pair parsing round trips") {
  for (const PairId pair : all_pairs) {
    REQUIRE(parse_pair(pair_literal(pair)) == pair);
    REQUIRE(machine_for(pair).literal() == pair_literal(pair));
  }
  CHECK(pair_literal(PairId::p132_231) == "132,231");
  CHECK_THROWS_AS(parse_pair("111,222"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pair("123,321"), std::invalid_argument);
}

TEST_CASE("only three pairs carry a pattern characterization") {
  CHECK(has_pattern_characterization(PairId::p132_231));
  CHECK(has_pattern_characterization(PairId::p123_132));
  CHECK(has_pattern_characterization(PairId::p123_312));
  CHECK_FALSE(has_pattern_characterization(PairId::p123_213));
  CHECK_FALSE(has_pattern_characterization(PairId::p132_312));
  CHECK_FALSE(has_pattern_characterization(PairId::p231_321));
  CHECK_THROWS_AS(characterization_patterns(PairId::p123_213), std::invalid_argument);
}

TEST_CASE("characterization pattern sets") {
  auto literals = [](PairId pair) {
    std::vector<std::string> ls;
    for (const auto& s : characterization_patterns(pair)) ls.push_back(s.literal());
    return ls;
  };
  CHECK(literals(PairId::p132_231) == std::vector<std::string>{"1324", "2314"});
  CHECK(literals(PairId::p123_132) == std::vector<std::string>{"2314", "3214", "4213", "[24^13"});
  CHECK(literals(PairId::p123_312) == std::vector<std::string>{"[132", "[42531", "[421^53"});
}

TEST_CASE("first violated pattern names the witness") {
  CHECK_FALSE(first_violated_pattern(parse_permutation("231"), PairId::p132_231).has_value());
  const auto v1 = first_violated_pattern(parse_permutation("2314"), PairId::p123_132);
  REQUIRE(v1.has_value());
  CHECK(v1->literal() == "2314");
  const auto v2 = first_violated_pattern(parse_permutation("1324"), PairId::p132_231);
  REQUIRE(v2.has_value());
  CHECK(v2->literal() == "1324");
  const auto v3 = first_violated_pattern(parse_permutation("132"), PairId::p123_312);
  REQUIRE(v3.has_value());
  CHECK(v3->literal() == "[132");
}

TEST_CASE("block criterion for the 132,231 machine") {
  CHECK(sortable_by_blocks_132_231(parse_permutation("231")));
  CHECK_FALSE(sortable_by_blocks_132_231(parse_permutation("1324")));
  // ordering must hold across every pair of blocks, not only adjacent ones:
  // here block {4} is separated from block {5} by an empty block at pivot 2
  CHECK_FALSE(sortable_by_blocks_132_231(parse_permutation("34215")));
  CHECK_FALSE(is_sortable(parse_permutation("34215"), machine_for(PairId::p132_231)));
}

TEST_CASE("block labels name the source block of each value") {
  const auto label = block_labels(parse_permutation("34152"), DecompKind::ltr_min);
  REQUIRE(label.size() == 6);
  CHECK(label[3] == 0);  // pivot
  CHECK(label[1] == 0);  // pivot
  CHECK(label[4] == 1);
  CHECK(label[5] == 2);
  CHECK(label[2] == 2);
}

TEST_CASE("block-labelled patterns fire on hand-built witnesses") {
  const std::vector<int> out = {2, 3, 1};
  std::vector<int> label(4, 0);
  label[2] = 1;
  label[3] = 2;
  label[1] = 3;
  CHECK(block_pattern_2_3_1(out, label));
  CHECK_FALSE(block_pattern_2_31(out, label));
  label[1] = 2;  // now 3 and 1 share a block
  CHECK_FALSE(block_pattern_2_3_1(out, label));
  CHECK(block_pattern_2_31(out, label));
  label[2] = 0;  // pivots never participate
  CHECK_FALSE(block_pattern_2_31(out, label));
}

TEST_CASE("four conditions for the 123,312 machine") {
  CHECK(four_conditions_123_312(parse_permutation("231")));
  CHECK_FALSE(four_conditions_123_312(parse_permutation("132")));
  CHECK(four_conditions_123_312(parse_permutation("1")));
}

TEST_CASE("simulation agrees with every characterization up to length 7") {
  for (const PairId pair : {PairId::p132_231, PairId::p123_132, PairId::p123_312}) {
    const MachineConfig machine = machine_for(pair);
    for (int n = 1; n <= 7; ++n) {
      for_each_permutation(n, [&](const std::vector<int>& v) {
        const Permutation p = Permutation::unchecked(v);
        const bool sim = is_sortable(p, machine);
        REQUIRE(sortable_by_patterns(p, pair) == sim);
        if (pair == PairId::p132_231) REQUIRE(sortable_by_blocks_132_231(p) == sim);
        if (pair == PairId::p123_312) REQUIRE(four_conditions_123_312(p) == sim);
      });
    }
  }
}

TEST_CASE("bounded blocks match the 2-31 criterion where the lemma applies") {
  const MachineConfig machine = machine_for(PairId::p123_312);
  for (int n = 1; n <= 7; ++n) {
    for_each_permutation(n, [&](const std::vector<int>& v) {
      const Permutation p = Permutation::unchecked(v);
      const auto d = decompose(p, DecompKind::ltr_max);
      const int t = static_cast<int>(d.pivots.size());
      bool c1 = true;
      for (int j = 0; j < t; ++j)
        if (d.pivots[static_cast<size_t>(j)] != n - t + 1 + j) c1 = false;
      static const std::vector<int> p213 = {2, 1, 3};
      bool c2 = true;
      for (const auto& b : d.blocks)
        if (detail::contains_classical_values(b, p213)) c2 = false;
      const auto out = out_t(p, machine).values();
      const auto label = block_labels(p, DecompKind::ltr_max);
      const bool c3 = !block_pattern_2_3_1(out, label);
      const bool no_2_31 = !block_pattern_2_31(out, label);
      const bool bb = bounded_blocks_lemma_check(p);
      if (is_sortable(p, machine)) REQUIRE(bb == no_2_31);
      if (c1 && c2 && c3) REQUIRE(bb == no_2_31);
    });
  }
}

TEST_CASE("structure report validates its machine family and sigma") {
  const Permutation p = parse_permutation("34152");
  CHECK_NOTHROW(structure_report(p, MachineFamily::f132_descent, parse_permutation("231")));
  CHECK_NOTHROW(structure_report(p, MachineFamily::f132_descent, parse_permutation("321")));
  CHECK_NOTHROW(structure_report(p, MachineFamily::f312_ascent, parse_permutation("123")));
  CHECK_NOTHROW(structure_report(p, MachineFamily::f312_ascent, parse_permutation("213")));
  // sigma must end in a descent for the 132 family, an ascent for the 312 family
  CHECK_THROWS_AS(structure_report(p, MachineFamily::f132_descent, parse_permutation("123")),
                  std::invalid_argument);
  CHECK_THROWS_AS(structure_report(p, MachineFamily::f312_ascent, parse_permutation("231")),
                  std::invalid_argument);
  CHECK_THROWS_AS(structure_report(p, MachineFamily::f132_descent, parse_permutation("21")),
                  std::invalid_argument);
}

TEST_CASE("structure report holds for every input on family machines") {
  struct Setup {
    MachineFamily family;
    const char* sigma;
  };
  const Setup setups[] = {{MachineFamily::f132_descent, "231"},
                          {MachineFamily::f132_descent, "321"},
                          {MachineFamily::f312_ascent, "123"},
                          {MachineFamily::f312_ascent, "213"}};
  for (const auto& setup : setups) {
    const Permutation sigma = parse_permutation(setup.sigma);
    for (int n = 1; n <= 6; ++n) {
      for_each_permutation(n, [&](const std::vector<int>& v) {
        const StructureReport r =
            structure_report(Permutation::unchecked(v), setup.family, sigma);
        REQUIRE(r.pivots_at_bottom);
        REQUIRE(r.blocks_rearranged);
        REQUIRE(r.all());
      });
    }
  }
}

TEST_CASE("outputs of 132-family machines list rearranged blocks then pivots") {
  // B~_i equals the classical-stack image of B_i for the (132,sigma) machine
  const MachineConfig machine = machine_for(PairId::p132_231);
  const MachineConfig classical = MachineConfig::parse("12");
  for (int n = 1; n <= 7; ++n) {
    for_each_permutation(n, [&](const std::vector<int>& v) {
      const Permutation p = Permutation::unchecked(v);
      const auto d = decompose(p, DecompKind::ltr_min);
      const auto out = out_t(p, machine).values();
      size_t at = 0;
      for (const auto& block : d.blocks) {
        if (block.empty()) continue;
        const auto tilde =
            detail::run_greedy(block, classical, nullptr).out;
        for (const int x : tilde) REQUIRE(out[at++] == x);
      }
      for (auto it = d.pivots.rbegin(); it != d.pivots.rend(); ++it) REQUIRE(out[at++] == *it);
      REQUIRE(at == out.size());
    });
  }
}
