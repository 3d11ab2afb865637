#include <set>

#include "doctest.h"
#include "placid/identity_forge.hpp"
#include "placid/verify/oracles.hpp"

using namespace placid;

namespace {

std::set<std::string> factors(std::string_view w, std::size_t k) {
  std::set<std::string> out;
  for (std::size_t i = 0; i + k <= w.size(); ++i) out.emplace(w.substr(i, k));
  return out;
}

}  // namespace

TEST_CASE("de Bruijn cycles") {
  for (int k = 1; k <= 10; ++k) {
    const AbWord cycle = de_bruijn(k);
    REQUIRE(cycle.size() == (std::size_t{1} << k));
    CHECK(cycle.substr(0, static_cast<std::size_t>(k)) == std::string(static_cast<std::size_t>(k), 'a'));
    const AbWord wrapped = cycle + cycle.substr(0, static_cast<std::size_t>(k - 1));
    CHECK(factors(wrapped, static_cast<std::size_t>(k)).size() == cycle.size());
  }
  CHECK_THROWS_AS(de_bruijn(0), std::invalid_argument);
}

TEST_CASE("verify_q examples") {
  CHECK(verify_q("ba", 2, true).ok());
  CHECK_FALSE(verify_q("ab", 2, true).ok());
  CHECK_FALSE(verify_q("bbaa", 3, false).ok());
  CHECK(verify_q("babbaa", 3, true).ok());
  CHECK_FALSE(verify_q("baa", 2, true).ok());  // contains aa
  CHECK_FALSE(verify_q("bab", 2, true).ok());  // does not end in a
  CHECK(verify_q("ab", 2, false).ok());
}

TEST_CASE("q-word examples") {
  CHECK(build_q(2, true) == "ba");
  const AbWord q3 = build_q(3, true);
  CHECK(q3 == "babbaa");
  CHECK(q3.size() <= 7);
  CHECK(build_q(6, false).size() == 36);
  CHECK_THROWS_AS(build_q(1, false), std::invalid_argument);
}

TEST_CASE("minimal q-words have the shortest possible length") {
  for (int n = 2; n <= 5; ++n) {
    const std::size_t shortest = oracle::min_q_length(n, false, 24);
    CHECK(build_q(n, false).size() == shortest);
    CHECK(shortest == (std::size_t{1} << (n - 1)) + static_cast<std::size_t>(n) - 2);
  }
  for (int n = 2; n <= 4; ++n) CHECK(build_q(n, true).size() == oracle::min_q_length(n, true, 24));
}

TEST_CASE("every constructed q passes verify_q, n in [2, 8]") {
  for (int n = 2; n <= 8; ++n) {
    for (bool constrained : {false, true}) {
      for (QMode mode : {QMode::Minimal, QMode::Any}) {
        const AbWord q = build_q(n, constrained, mode);
        INFO("n=" << n << " constrained=" << constrained << " mode=" << to_string(mode));
        CHECK(verify_q(q, n, constrained).ok());
        if (constrained) CHECK(longest_a_run(q) == static_cast<std::size_t>(n - 1));
      }
    }
  }
}

TEST_CASE("mode names") {
  CHECK(parse_qmode("minimal") == QMode::Minimal);
  CHECK(parse_qmode("any") == QMode::Any);
  CHECK(to_string(QMode::Any) == "any");
  CHECK_THROWS_AS(parse_qmode("shortest"), std::invalid_argument);
}

TEST_CASE("substitution") {
  CHECK(substitute("ab", "ab", "ba") == "abba");
  CHECK(substitute("a", "xyz", "q") == "xyz");
  CHECK(substitute("ba", std::vector<int>{1, 2}, std::vector<int>{3}) == std::vector<int>{3, 1, 2});
  CHECK(substitute("", "ab", "ba").empty());
}

TEST_CASE("rank-2 constrained identity") {
  const auto b = build_identity(2, true);
  CHECK(b.h == 1);
  CHECK(b.q == "ba");
  CHECK(b.pre_lhs == "baaba");
  CHECK(b.pre_rhs == "babba");
  CHECK(b.length() == 10);
  CHECK(b.identity.lhs == "baababbaab");
  CHECK(b.identity.rhs == "baabbabaab");
}

TEST_CASE("the rank-6 identity has length 1298") {
  const auto b = build_identity(6, false);
  CHECK(b.h == 9);
  CHECK(b.length() == 1298);
  CHECK(b.identity.rhs.size() == 1298);
}

TEST_CASE("identity shape") {
  CHECK(identity_exponent(2) == 1);
  CHECK(identity_exponent(3) == 2);
  CHECK(identity_exponent(4) == 4);
  CHECK(identity_exponent(5) == 6);
  CHECK(identity_exponent(6) == 9);
  for (int n = 2; n <= 7; ++n) {
    for (bool constrained : {false, true}) {
      const auto b = build_identity(n, constrained);
      INFO("n=" << n << " constrained=" << constrained);
      const std::size_t q = b.q.size();
      const auto h = static_cast<std::size_t>(b.h);
      CHECK(b.length() == 2 * (2 * h * q + 1));
      std::string power;
      for (std::size_t i = 0; i < h; ++i) power += b.q;
      CHECK(b.pre_lhs == power + "a" + power);
      CHECK(b.pre_rhs == power + "b" + power);
      CHECK(b.identity.lhs == substitute(b.pre_lhs, "ab", "ba"));
      const std::string run(static_cast<std::size_t>(n), 'a');
      if (constrained) {
        CHECK(b.pre_lhs.find(run) != std::string::npos);
        CHECK(b.pre_rhs.find(run) == std::string::npos);
      }
    }
  }
}

TEST_CASE("identity validation") {
  CHECK_NOTHROW(validate_identity({"ab", "ba"}));
  CHECK_THROWS_AS(validate_identity({"", "a"}), std::invalid_argument);
  CHECK_THROWS_AS(validate_identity({"ac", "a"}), std::invalid_argument);
  const auto fixed = rank3_fixture_identity();
  CHECK(fixed.lhs.size() == 60);
  CHECK(fixed.rhs.size() == 60);
  CHECK(fixed.lhs != fixed.rhs);
}
