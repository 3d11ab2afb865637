#pragma once

// Faithful tropical representation of the plactic monoid of rank n by
// 2^n x 2^n max-plus matrices indexed by subsets of [n]:
//
//   rho(x)_{P,Q} = -inf  if |P| != |Q| or P is not <= Q,
//                   1    if x lies in the union of the interval [P, Q],
//                   0    otherwise,
//
// extended multiplicatively; the empty word maps to the matrix with 0 on
// every comparable equal-size pair.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "placid/subset_lattice.hpp"
#include "placid/tropical.hpp"
#include "placid/words.hpp"

namespace placid {

/// Largest rank for which the representation is built (dimension 2^rank).
inline constexpr int kMaxRepRank = 10;

/// Generator images for one rank, computed once and shared read-only.
class PlacticRep {
 public:
  /// Throws std::invalid_argument unless 1 <= rank <= kMaxRepRank.
  explicit PlacticRep(int rank);

  int rank() const { return rank_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<Subset>& labels() const { return labels_; }
  /// Row/column of `s`; throws if s is not a subset of [rank].
  std::size_t index_of(Subset s) const;

  /// Throws std::invalid_argument for x outside [1, rank].
  const TropMatrix& generator(Letter x) const;
  const TropMatrix& identity() const { return identity_; }
  /// Image of a word; the empty word maps to identity().
  TropMatrix word(const Word& w) const;

 private:
  int rank_;
  std::vector<Subset> labels_;
  std::vector<std::size_t> index_;  // by mask
  TropMatrix identity_;
  std::vector<TropMatrix> generators_;
};

TropMatrix rho_generator(int n, Letter x);
TropMatrix rho_identity(int n);
TropMatrix rho_word(int n, const Word& w);

/// Longest scattered subword of w readable from s to t, i.e. along a weakly
/// increasing chain s <= P_1 <= ... <= P_k <= t with the i-th letter in P_i.
/// Requires |s| == |t| and s <= t; throws std::invalid_argument otherwise.
std::int64_t max_readable_length(const Word& w, Subset s, Subset t);

struct FaithfulnessReport {
  int rank = 0;
  int max_len = 0;
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::size_t words_checked = 0;
  std::size_t classes = 0;
  /// Word pairs on which matrix equality and tableau equality disagree.
  std::vector<std::pair<Word, Word>> violations;

  bool ok() const { return violations.empty(); }
};

/// Compares rho-equality with tableau equality over all words of length at
/// most max_len (exhaustively when there are at most `exhaustive_limit`
/// such words, otherwise on `samples` seeded random words).
FaithfulnessReport faithfulness_check(int n, int max_len, std::size_t exhaustive_limit = 200000,
                                      std::size_t samples = 20000, std::uint64_t seed = 0);

/// All words over [n] of length exactly len, in lexicographic order.
std::vector<Word> all_words(int n, int len);

}  // namespace placid
