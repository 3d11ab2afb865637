#include <algorithm>

#include "doctest.h"
#include "placid/subset_lattice.hpp"
#include "placid/verify/oracles.hpp"
#include "test_util.hpp"

using namespace placid;

namespace {

Subset S(std::initializer_list<int> xs) { return Subset::of(xs); }

std::vector<Subset> sorted(std::vector<Subset> xs) {
  std::sort(xs.begin(), xs.end(), canonical_less);
  return xs;
}

}  // namespace

TEST_CASE("order examples") {
  CHECK(subset_leq(S({1, 2}), S({2, 3})));
  CHECK_FALSE(subset_leq(S({1}), S({1, 2})));
  CHECK(subset_leq(S({1, 2, 3}), S({3})));
  CHECK(subset_leq(S({}), S({})));
  CHECK(subset_leq(S({1}), S({})));
  CHECK_FALSE(subset_less(S({2}), S({2})));
}

TEST_CASE("order is a partial order on 2^[4]") {
  const auto all = testutil::all_subsets(4);
  for (Subset a : all) {
    CHECK(subset_leq(a, a));
    for (Subset b : all) {
      if (subset_leq(a, b) && subset_leq(b, a)) CHECK(a == b);
      for (Subset c : all) {
        if (subset_leq(a, b) && subset_leq(b, c)) CHECK(subset_leq(a, c));
      }
    }
  }
}

TEST_CASE("meet and join match brute-force bounds, n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    for (Subset s : testutil::all_subsets(n)) {
      for (Subset t : testutil::all_subsets(n)) {
        REQUIRE(meet(s, t) == oracle::glb(s, t, n));
        REQUIRE(join(s, t) == oracle::lub(s, t, n));
      }
    }
  }
  CHECK(meet(S({1, 4}), S({2, 3})) == S({1, 3}));
  CHECK(join(S({1, 4}), S({2, 3})) == S({2, 4}));
  CHECK(meet(S({3}), S({1, 2})) == S({1, 2}));
  CHECK(join(S({3}), S({1, 2})) == S({3}));
}

TEST_CASE("meet and join are monotone") {
  const auto all = testutil::all_subsets(4);
  for (Subset s : all) {
    for (Subset t : all) {
      if (!subset_leq(s, t)) continue;
      for (Subset n : all) {
        CHECK(subset_leq(meet(s, n), meet(t, n)));
        CHECK(subset_leq(join(s, n), join(t, n)));
      }
    }
  }
}

TEST_CASE("canonical order: size, then lexicographic") {
  const std::vector<Subset> expected{S({}),     S({1}),    S({2}),    S({3}),
                                     S({1, 2}), S({1, 3}), S({2, 3}), S({1, 2, 3})};
  CHECK(canonical_subsets(3) == expected);
  CHECK(canonical_subsets(0) == std::vector<Subset>{S({})});
  CHECK(canonical_subsets(5).size() == 32);
}

TEST_CASE("enumerate_interval examples") {
  CHECK(enumerate_interval(S({1}), S({2}), 2) == std::vector<Subset>{S({1}), S({2})});
  CHECK(enumerate_interval(S({2, 3}), S({2, 3}), 3) == std::vector<Subset>{S({2, 3})});
  CHECK(enumerate_interval(S({1, 2}), S({2, 3}), 3) ==
        std::vector<Subset>{S({1, 2}), S({1, 3}), S({2, 3})});
  CHECK_THROWS_AS(enumerate_interval(S({2}), S({1}), 2), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_interval(S({1}), S({4}), 3), std::invalid_argument);
}

TEST_CASE("enumerate_interval matches filtering, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for (Subset s : testutil::all_subsets(n)) {
      for (Subset t : testutil::all_subsets(n)) {
        if (!subset_leq(s, t)) continue;
        REQUIRE(enumerate_interval(s, t, n) == sorted(oracle::interval_by_filter(s, t, n)));
      }
    }
  }
}

TEST_CASE("interval union") {
  CHECK(interval_union(S({1}), S({2}), 2) == S({1, 2}));
  CHECK(interval_union(S({2}), S({2}), 2) == S({2}));
  CHECK(interval_union(S({1, 2}), S({3, 4}), 4) == S({1, 2, 3, 4}));
}

TEST_CASE("chain_length examples") {
  CHECK(chain_length(S({1}), S({3})) == 3);
  CHECK(chain_length(S({2, 4}), S({2, 4})) == 1);
  CHECK(chain_length(S({1, 2}), S({3, 4})) == 5);
  CHECK(oracle::longest_chain(S({1, 2}), S({3, 4}), 4) == 5);
  CHECK_THROWS_AS(chain_length(S({1}), S({1, 2})), std::invalid_argument);
  CHECK_THROWS_AS(chain_length(S({3}), S({1})), std::invalid_argument);
}

TEST_CASE("chain_length matches exhaustive search and the h+1 bound, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    const int bound = n * n / 4 + 1;
    for (Subset s : testutil::all_subsets(n)) {
      for (Subset t : testutil::all_subsets(n)) {
        if (s.size() != t.size() || !subset_leq(s, t)) continue;
        const int c = chain_length(s, t);
        REQUIRE(c == oracle::longest_chain(s, t, n));
        REQUIRE(c <= bound);
      }
    }
  }
}

TEST_CASE("word counts") {
  const WordCounts w({1, 2, 2, 4}, 4);
  CHECK(w.count(2) == 2);
  CHECK(w.count(3) == 0);
  CHECK(w.count_of_set(S({2, 4})) == 3);
  CHECK(w.count_of_set(S({})) == 0);
  CHECK_THROWS_AS(WordCounts({1, 5}, 4), std::invalid_argument);
  CHECK_THROWS_AS(WordCounts::from_counts({1, -1}), std::invalid_argument);
}

TEST_CASE("split example") {
  const WordCounts w({1, 2, 3, 4}, 4);
  const Subset n = split(w, S({1, 2}), S({3, 4}));
  CHECK(n == S({2, 3}));
  CHECK(oracle::split_violation(w, S({1, 2}), S({3, 4}), n).empty());
}

TEST_CASE("split returns T on short intervals") {
  const WordCounts w({1, 1, 3}, 3);
  CHECK(split(w, S({1}), S({3})) == S({3}));
  CHECK(split(w, S({1, 2}), S({2, 3})) == S({2, 3}));
}

TEST_CASE("split_apply examples") {
  const WordCounts uniform = WordCounts::from_counts({1, 1, 1});
  CHECK(split_apply_increasing(uniform, S({1}), S({2})) == S({2}));

  const WordCounts w({1, 2, 3, 4}, 4);
  const Subset inc = split_apply_increasing(w, S({1, 2}), S({3, 4}));
  CHECK(oracle::split_increasing_violation(w, S({1, 2}), S({3, 4}), inc).empty());
  const Subset dec = split_apply_decreasing(w, S({1, 2}), S({3, 4}));
  CHECK(oracle::split_decreasing_violation(w, S({1, 2}), S({3, 4}), dec).empty());
}

TEST_CASE("split preconditions") {
  const WordCounts w({1, 2}, 2);
  CHECK_THROWS_AS(split(w, S({1}), S({1})), std::invalid_argument);
  CHECK_THROWS_AS(split(w, S({2}), S({1})), std::invalid_argument);
  CHECK_THROWS_AS(split(w, S({1}), S({1, 2})), std::invalid_argument);
  const WordCounts heavy_s({1, 1, 2}, 2);
  CHECK_THROWS_AS(split_apply_increasing(heavy_s, S({1}), S({2})), std::invalid_argument);
  const WordCounts heavy_t({1, 2, 2}, 2);
  CHECK_THROWS_AS(split_apply_decreasing(heavy_t, S({1}), S({2})), std::invalid_argument);
}

TEST_CASE("split postconditions on random instances, n <= 6") {
  for (std::uint64_t i = 0; i < 2000; ++i) {
    Rng rng = stream_rng(19, i);
    const int n = static_cast<int>(uniform_int(rng, 2, 6));
    std::vector<std::int64_t> counts(static_cast<std::size_t>(n));
    for (auto& c : counts) c = uniform_int(rng, 0, 4);
    const auto w = WordCounts::from_counts(counts);
    const auto [s, t] = testutil::random_pair(rng, n, true);
    INFO("S=" << format_subset(s) << " T=" << format_subset(t));
    REQUIRE(oracle::split_violation(w, s, t, split(w, s, t)) == "");
    if (w.count_of_set(s) <= w.count_of_set(t)) {
      REQUIRE(oracle::split_increasing_violation(w, s, t, split_apply_increasing(w, s, t)) == "");
    }
    if (w.count_of_set(t) <= w.count_of_set(s)) {
      REQUIRE(oracle::split_decreasing_violation(w, s, t, split_apply_decreasing(w, s, t)) == "");
    }
  }
}

TEST_CASE("subset text form") {
  CHECK(format_subset(S({1, 3, 4})) == "{1,3,4}");
  CHECK(format_subset(S({})) == "{}");
  CHECK(parse_subset("{1,3,4}") == S({1, 3, 4}));
  CHECK(parse_subset("{ 4, 1 }") == S({1, 4}));
  CHECK(parse_subset("{}") == S({}));
  CHECK_THROWS_AS(parse_subset("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_subset("{1,1}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_subset("{0}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_subset("{1,}"), std::invalid_argument);
  for (Subset s : testutil::all_subsets(5)) CHECK(parse_subset(format_subset(s)) == s);
}

TEST_CASE("subset accessors") {
  const Subset s = S({2, 5, 7});
  CHECK(s.size() == 3);
  CHECK(s.max_element() == 7);
  CHECK(s.nth(1) == 2);
  CHECK(s.nth(3) == 7);
  CHECK_THROWS_AS(s.nth(4), std::out_of_range);
  CHECK(s.within(7));
  CHECK_FALSE(s.within(6));
  CHECK(s.elements() == std::vector<int>{2, 5, 7});
  CHECK_THROWS_AS(S({0}), std::invalid_argument);
  CHECK_THROWS_AS(S({32}), std::invalid_argument);
}
