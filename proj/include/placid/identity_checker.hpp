#pragma once

// Verdicts on two-variable identities: does u = v hold in the plactic monoid
// of rank n (checked on exhaustive or sampled substitutions), and does it fail
// in k x k upper triangular tropical matrices (seeded witness search)?
//
// Sampling is reproducible: sample i always draws from stream_rng(seed, i),
// workers split the index range between them, and the reported hit is the
// smallest sample index that produced one, independent of thread count.

#include <cstdint>
#include <optional>
#include <string>

#include "placid/identity_forge.hpp"
#include "placid/tropical.hpp"
#include "placid/words.hpp"

namespace placid {

inline constexpr double kDefaultBudgetSeconds = 60.0;

struct PlacticStrategy {
  enum class Kind { Exhaustive, Random };

  Kind kind = Kind::Random;
  /// Substituted words have length at most this.
  int max_word_len = 8;
  /// Random strategy only.
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;

  static PlacticStrategy exhaustive(int max_word_len);
  static PlacticStrategy random(std::uint64_t samples, int max_word_len, std::uint64_t seed);
};

struct RunLimits {
  double budget_seconds = kDefaultBudgetSeconds;
  /// 0 means one worker per hardware thread.
  unsigned threads = 0;
};

/// Substitution pair for sample `index`: both words have length uniform in
/// [0, max_len] and i.i.d. uniform letters from [1, n].
std::pair<Word, Word> sample_word_pair(int n, int max_len, std::uint64_t seed, std::uint64_t index);

struct PlacticCounterexample {
  Word x;
  Word y;
  std::uint64_t sample_index = 0;
};

struct PlacticCheckReport {
  IdentityWords identity;
  int rank = 0;
  PlacticStrategy strategy;
  std::uint64_t samples_run = 0;
  bool budget_exhausted = false;
  std::optional<PlacticCounterexample> counterexample;

  /// "counterexample", "pass", or "inconclusive" (budget ran out first).
  std::string verdict() const;
};

/// True when substituting a -> x, b -> y gives plactic-equal sides.
bool holds_at(const IdentityWords& id, const Word& x, const Word& y);

/// Throws std::invalid_argument for n < 1 or an invalid identity. A
/// reported counterexample has been re-checked before returning.
PlacticCheckReport check_plactic(const IdentityWords& id, int n, const PlacticStrategy& strategy,
                                 const RunLimits& limits = {});

struct TropSearchConfig {
  std::int64_t entry_min = -3;
  std::int64_t entry_max = 3;
  double neg_inf_density = 0.25;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
};

struct TropWitness {
  IdentityWords identity;
  std::size_t dim = 0;
  TropMatrix x{1};
  TropMatrix y{1};
  std::size_t row = 0;
  std::size_t col = 0;
  Trop lhs_value;
  Trop rhs_value;
  std::uint64_t sample_index = 0;
};

/// Re-evaluates both sides left to right from scratch and confirms that
/// the matrices are upper triangular and the recorded entry differs.
bool verify_witness(const TropWitness& w);

/// The matrix pair drawn for sample `index` of a search. Even samples are
/// uniform upper triangular matrices with the configured range and -inf
/// density. Odd samples are structured: 0/-inf diagonals with a large
/// off-diagonal range, which lets long runs of one letter dominate.
std::pair<TropMatrix, TropMatrix> sample_ut_pair(std::size_t k, const TropSearchConfig& config,
                                                 std::uint64_t index);

struct TropSearchReport {
  IdentityWords identity;
  std::size_t dim = 0;
  TropSearchConfig config;
  std::uint64_t samples_run = 0;
  bool budget_exhausted = false;
  std::optional<TropWitness> witness;

  /// "witness", "not-found", or "inconclusive".
  std::string verdict() const;
};

/// Throws std::invalid_argument for k < 1, an empty entry range, or an
/// invalid identity. A returned witness has passed verify_witness.
TropSearchReport check_tropical(const IdentityWords& id, std::size_t k,
                                const TropSearchConfig& config, const RunLimits& limits = {});

struct RhoConsistencyReport {
  IdentityWords identity;
  int rank = 0;
  int max_word_len = 0;
  std::uint64_t seed = 0;
  std::uint64_t samples_run = 0;
  /// Samples where the two sides map to different matrices.
  std::uint64_t matrix_mismatches = 0;
  /// Samples where the matrix verdict and the tableau verdict differ.
  std::uint64_t verdict_disagreements = 0;
  std::optional<std::pair<Word, Word>> first_disagreement;

  bool consistent() const { return verdict_disagreements == 0; }
};

/// Evaluates both sides on rho images of the same substitution pairs that
/// check_plactic's random strategy draws, and compares with tableaux.
/// Requires 1 <= n <= 4.
RhoConsistencyReport check_rho_consistency(const IdentityWords& id, int n, std::uint64_t samples,
                                           int max_word_len, std::uint64_t seed);

}  // namespace placid
