#include "doctest.h"
#include "placid/plactic_rep.hpp"
#include "placid/verify/oracles.hpp"
#include "test_util.hpp"

using namespace placid;

namespace {

Subset S(std::initializer_list<int> xs) { return Subset::of(xs); }

Trop entry(const PlacticRep& rep, const TropMatrix& m, Subset p, Subset q) {
  return m(rep.index_of(p), rep.index_of(q));
}

}  // namespace

TEST_CASE("generator entries") {
  const PlacticRep rep(2);
  const auto r1 = rep.generator(1);
  CHECK(entry(rep, r1, S({1}), S({2})) == Trop{1});
  CHECK(entry(rep, r1, S({2}), S({2})) == Trop{0});
  CHECK(entry(rep, r1, S({1}), S({1})) == Trop{1});
  CHECK(entry(rep, r1, S({2}), S({1})) == Trop::neg_inf());
  CHECK(entry(rep, r1, S({}), S({})) == Trop{0});
  CHECK(entry(rep, r1, S({1, 2}), S({1, 2})) == Trop{1});
  CHECK(rho_generator(2, 1) == r1);
  CHECK_THROWS_AS(rep.generator(3), std::invalid_argument);
  CHECK_THROWS_AS(rep.generator(0), std::invalid_argument);
}

TEST_CASE("generator entries follow the three-case definition, n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    const PlacticRep rep(n);
    for (Letter x = 1; x <= n; ++x) {
      const auto m = rep.generator(x);
      for (Subset p : rep.labels()) {
        for (Subset q : rep.labels()) {
          Trop expected = Trop::neg_inf();
          if (p.size() == q.size() && subset_leq(p, q)) {
            bool covered = false;
            for (Subset mid : oracle::interval_by_filter(p, q, n)) covered = covered || mid.contains(x);
            expected = Trop{covered ? 1 : 0};
          }
          REQUIRE(entry(rep, m, p, q) == expected);
        }
      }
    }
  }
}

TEST_CASE("identity image") {
  const PlacticRep rep(2);
  const auto e = rep.identity();
  CHECK(e == rho_identity(2));
  CHECK(e * rep.generator(1) == rep.generator(1));
  CHECK(rep.generator(2) * e == rep.generator(2));
  CHECK(entry(rep, e, S({}), S({})) == Trop{0});
  CHECK(entry(rep, e, S({1}), S({2})) == Trop{0});
  CHECK(entry(rep, e, S({1}), S({1, 2})) == Trop::neg_inf());
  CHECK(rho_word(2, {}) == e);
}

TEST_CASE("word images") {
  CHECK(rho_word(2, {1, 2}) == rho_generator(2, 1) * rho_generator(2, 2));
  CHECK_THROWS_AS(rho_word(3, {1, 3, 1, 4}), std::invalid_argument);
  CHECK_THROWS_AS(PlacticRep(0), std::invalid_argument);
  CHECK_THROWS_AS(PlacticRep(kMaxRepRank + 1), std::invalid_argument);
  const auto m = rho_word(3, {1, 3, 1});
  REQUIRE(m.labels());
  CHECK(*m.labels() == canonical_subsets(3));
}

TEST_CASE("readability examples") {
  CHECK(max_readable_length({1, 2, 1}, S({1}), S({2})) == 2);
  CHECK(oracle::readable_length({1, 2, 1}, S({1}), S({2}), 2) == 2);
  CHECK(entry(PlacticRep(2), rho_word(2, {1, 2, 1}), S({1}), S({2})) == Trop{2});
  CHECK(max_readable_length({}, S({1}), S({2})) == 0);
  CHECK(max_readable_length({2, 1}, S({1}), S({2})) == 1);
  CHECK_THROWS_AS(max_readable_length({1}, S({2}), S({1})), std::invalid_argument);
  CHECK_THROWS_AS(max_readable_length({1}, S({1}), S({1, 2})), std::invalid_argument);
}

TEST_CASE("readability DP matches subword enumeration, n <= 5") {
  for (std::uint64_t i = 0; i < 400; ++i) {
    Rng rng = stream_rng(21, i);
    const int n = static_cast<int>(uniform_int(rng, 2, 5));
    const Word w = testutil::random_word(rng, n, 0, 9);
    const auto [s, t] = testutil::random_pair(rng, n, false);
    REQUIRE(max_readable_length(w, s, t) == oracle::readable_length(w, s, t, n));
  }
}

TEST_CASE("support and diagonal laws") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng rng = stream_rng(22, i);
    const int n = static_cast<int>(uniform_int(rng, 1, 4));
    const PlacticRep rep(n);
    const Word w = testutil::random_word(rng, n, 0, 10);
    const auto m = rep.word(w);
    for (Subset p : rep.labels()) {
      // Reading from P to P can use exactly the letters that lie in P.
      std::int64_t inside = 0;
      for (Letter x : w) inside += p.contains(x) ? 1 : 0;
      REQUIRE(entry(rep, m, p, p) == Trop{inside});
      for (Subset q : rep.labels()) {
        REQUIRE(entry(rep, m, p, q).is_finite() == (p.size() == q.size() && subset_leq(p, q)));
      }
    }
  }
}

TEST_CASE("Knuth rewrites leave the image unchanged") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    Rng rng = stream_rng(23, i);
    const int n = static_cast<int>(uniform_int(rng, 2, 4));
    const Word w = testutil::random_word(rng, n, 3, 9);
    const auto m = rho_word(n, w);
    for (const Word& v : oracle::knuth_neighbors_by_relations(w, n)) REQUIRE(rho_word(n, v) == m);
  }
}

TEST_CASE("faithfulness examples") {
  const auto a = rho_word(4, {1, 3, 1, 4});
  CHECK(rho_word(4, {1, 3, 4, 1}) == a);
  CHECK(rho_word(4, {3, 1, 1, 4}) == a);
  CHECK_FALSE(rho_word(2, {1, 2}) == rho_word(2, {2, 1}));
  CHECK_FALSE(plactic_equal({1, 2}, {2, 1}));
  CHECK(rho_word(3, {2, 3, 1}) == rho_word(3, {2, 3, 1}));
}

TEST_CASE("faithfulness on small ranks") {
  const auto r2 = faithfulness_check(2, 7);
  CHECK(r2.exhaustive);
  CHECK(r2.ok());
  CHECK(r2.words_checked == 255);

  const auto r1 = faithfulness_check(1, 4);
  CHECK(r1.ok());
  CHECK(r1.classes == 5);

  // Sampled mode when the exhaustive limit is too small.
  const auto sampled = faithfulness_check(3, 7, 100, 2000, 5);
  CHECK_FALSE(sampled.exhaustive);
  CHECK(sampled.ok());
  CHECK(sampled.seed == 5);
}

TEST_CASE("all_words") {
  CHECK(all_words(2, 0) == std::vector<Word>{Word{}});
  CHECK(all_words(2, 2) == std::vector<Word>{{1, 1}, {1, 2}, {2, 1}, {2, 2}});
  CHECK(all_words(3, 4).size() == 81);
}
