#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "pamlab/permutation.hpp"
#include "pamlab/sequences.hpp"

using namespace pamlab;

TEST_CASE("permutation construction validates a rearrangement of 1..n") {
  CHECK_NOTHROW(Permutation({2, 3, 1}));
  CHECK_NOTHROW(Permutation(std::vector<int>{}));
  CHECK_THROWS_AS(Permutation({2, 2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({-1, 1}), std::invalid_argument);
}

TEST_CASE("permutation accessors") {
  const Permutation p({2, 3, 1});
  CHECK(p.size() == 3);
  CHECK(p[0] == 2);
  CHECK(p[2] == 1);
  CHECK(Permutation::identity(4) == Permutation({1, 2, 3, 4}));
  CHECK(Permutation::identity(0).empty());
  CHECK(p != Permutation::identity(3));
  CHECK(make_permutation({1, 2}) == Permutation({1, 2}));
}

TEST_CASE("partial permutation construction validates range and distinctness") {
  CHECK_NOTHROW(PartialPermutation({4, 1, 7, 2}, 7));
  CHECK_NOTHROW(PartialPermutation({}, 0));
  CHECK_NOTHROW(PartialPermutation({}, 3));
  CHECK_THROWS_AS(PartialPermutation({1, 2, 3}, 2), std::invalid_argument);
  CHECK_THROWS_AS(PartialPermutation({0}, 3), std::invalid_argument);
  CHECK_THROWS_AS(PartialPermutation({4}, 3), std::invalid_argument);
  CHECK_THROWS_AS(PartialPermutation({2, 2}, 3), std::invalid_argument);
  CHECK_THROWS_AS(PartialPermutation({1}, -1), std::invalid_argument);
}

TEST_CASE("partial permutation ordering sorts by ambient first") {
  CHECK(PartialPermutation({2}, 2) < PartialPermutation({1}, 3));
  CHECK(PartialPermutation({1}, 3) < PartialPermutation({2}, 3));
}

TEST_CASE("reverse flips the value sequence") {
  CHECK(reverse(Permutation({2, 3, 1})) == Permutation({1, 3, 2}));
  CHECK(reverse(PartialPermutation({4, 1, 7}, 7)) == PartialPermutation({7, 1, 4}, 7));
  CHECK(reverse(Permutation(std::vector<int>{})).empty());
}

TEST_CASE("ltr-min decomposition of a known example") {
  const auto d = decompose(Permutation({3, 4, 1, 5, 2}), DecompKind::ltr_min);
  CHECK(d.pivots == std::vector<int>{3, 1});
  CHECK(d.positions == std::vector<int>{1, 3});
  REQUIRE(d.block_count() == 2);
  CHECK(d.blocks[0] == std::vector<int>{4});
  CHECK(d.blocks[1] == std::vector<int>{5, 2});
}

TEST_CASE("ltr-max decomposition of a known example") {
  const auto d = decompose(Permutation({3, 4, 1, 5, 2}), DecompKind::ltr_max);
  CHECK(d.pivots == std::vector<int>{3, 4, 5});
  CHECK(d.positions == std::vector<int>{1, 2, 4});
  REQUIRE(d.block_count() == 3);
  CHECK(d.blocks[0].empty());
  CHECK(d.blocks[1] == std::vector<int>{1});
  CHECK(d.blocks[2] == std::vector<int>{2});
}

TEST_CASE("decompose throws on the empty permutation") {
  CHECK_THROWS_AS(decompose(Permutation(std::vector<int>{}), DecompKind::ltr_min),
                  std::invalid_argument);
}

TEST_CASE("decompose then recompose is the identity, pivots are monotone") {
  for (int n = 1; n <= 8; ++n) {
    for_each_permutation(n, [&](const std::vector<int>& v) {
      const Permutation p = Permutation::unchecked(v);
      for (const DecompKind kind : {DecompKind::ltr_min, DecompKind::ltr_max}) {
        const auto d = decompose(p, kind);
        REQUIRE(recompose(d) == p);
        REQUIRE(d.pivots.front() == v.front());
        for (size_t i = 1; i < d.pivots.size(); ++i) {
          if (kind == DecompKind::ltr_min)
            REQUIRE(d.pivots[i] < d.pivots[i - 1]);
          else
            REQUIRE(d.pivots[i] > d.pivots[i - 1]);
        }
        REQUIRE(d.pivots.back() == (kind == DecompKind::ltr_min ? 1 : n));
      }
    });
  }
}

TEST_CASE("to_string is compact exactly when all values are single digits") {
  CHECK(to_string(Permutation({2, 3, 1})) == "231");
  CHECK(to_string(Permutation({10, 2, 3, 4, 5, 6, 7, 8, 9, 1})) == "10 2 3 4 5 6 7 8 9 1");
  CHECK(to_string(Permutation(std::vector<int>{})) == "");
  CHECK(to_string(PartialPermutation({4, 1, 7, 2}, 7)) == "4 1 7 2 of 7");
  CHECK(to_string(PartialPermutation({}, 3)) == "of 3");
}

TEST_CASE("parse_permutation accepts compact and spaced forms") {
  CHECK(parse_permutation("231") == Permutation({2, 3, 1}));
  CHECK(parse_permutation("2 3 1") == Permutation({2, 3, 1}));
  CHECK(parse_permutation("2,3,1") == Permutation({2, 3, 1}));
  CHECK(parse_permutation("10 2 3 4 5 6 7 8 9 1") ==
        Permutation({10, 2, 3, 4, 5, 6, 7, 8, 9, 1}));
  CHECK_THROWS_AS(parse_permutation("221"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("1 2 4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("2x1"), std::invalid_argument);
}

TEST_CASE("parse_partial_permutation needs the ambient suffix") {
  CHECK(parse_partial_permutation("4 1 7 2 of 7") == PartialPermutation({4, 1, 7, 2}, 7));
  CHECK(parse_partial_permutation("4172 of 7") == PartialPermutation({4, 1, 7, 2}, 7));
  CHECK(parse_partial_permutation("of 3") == PartialPermutation({}, 3));
  CHECK(parse_partial_permutation("10 11 of 12") == PartialPermutation({10, 11}, 12));
  // compact digit-splitting applies only when the ambient is single-digit
  CHECK_THROWS_AS(parse_partial_permutation("4172 of 12"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partial_permutation("4 1 7 2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partial_permutation("4 4 of 7"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partial_permutation("8 of 7"), std::invalid_argument);
}

TEST_CASE("string round trip over every permutation of length 7 and 10") {
  for_each_permutation(7, [](const std::vector<int>& v) {
    const Permutation p = Permutation::unchecked(v);
    REQUIRE(parse_permutation(to_string(p)) == p);
  });
  // one spot check in the spaced regime
  const Permutation big = parse_permutation("10 9 8 7 6 5 4 3 2 1");
  CHECK(parse_permutation(to_string(big)) == big);
}

TEST_CASE("for_each_permutation enumerates in lexicographic order") {
  std::vector<Permutation> got;
  for_each_permutation(3, [&](const std::vector<int>& v) {
    got.push_back(Permutation::unchecked(v));
  });
  const std::vector<Permutation> want = {
      Permutation({1, 2, 3}), Permutation({1, 3, 2}), Permutation({2, 1, 3}),
      Permutation({2, 3, 1}), Permutation({3, 1, 2}), Permutation({3, 2, 1})};
  CHECK(got == want);
  CHECK(all_permutations(0).size() == 1);
  CHECK(all_permutations(0)[0].empty());
  CHECK(all_permutations(5).size() == 120);
}

TEST_CASE("for_each_permutation_with_first fixes the first entry") {
  for (int n = 1; n <= 6; ++n) {
    for (int first = 1; first <= n; ++first) {
      u64 count = 0;
      for_each_permutation_with_first(n, first, [&](const std::vector<int>& v) {
        REQUIRE(v.front() == first);
        ++count;
      });
      REQUIRE(count == factorial(n - 1));
    }
  }
}

TEST_CASE("partial permutation enumeration is length-major then lexicographic") {
  std::vector<PartialPermutation> got;
  for_each_partial_permutation(2, [&](const std::vector<int>& v) {
    got.push_back(PartialPermutation::unchecked(v, 2));
  });
  const std::vector<PartialPermutation> want = {
      PartialPermutation({}, 2), PartialPermutation({1}, 2), PartialPermutation({2}, 2),
      PartialPermutation({1, 2}, 2), PartialPermutation({2, 1}, 2)};
  CHECK(got == want);
}

TEST_CASE("partial permutation counts follow the arrangement numbers") {
  const u64 want[] = {1, 2, 5, 16, 65, 326, 1957};
  for (int n = 0; n <= 6; ++n) {
    u64 count = 0;
    for_each_partial_permutation(n, [&](const std::vector<int>&) { ++count; });
    REQUIRE(count == want[n]);
    u64 bySum = 0;
    for (int k = 0; k <= n; ++k) bySum += binomial(n, k) * factorial(k);
    REQUIRE(count == bySum);
    REQUIRE(all_partial_permutations(n).size() == count);
  }
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(10) == 3628800);
}
