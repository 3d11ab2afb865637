#pragma once

// The partial order on 2^[n] that indexes the tropical representation:
//
//   S <= T  iff  |S| >= |T|  and  S^i <= T^i  for every i <= |T|,
//
// where S^i is the i-th smallest element of S. The empty set is above every
// set. (2^[n], <=) is a lattice; meet/join below use the elementwise
// min/max description of it.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "placid/words.hpp"

namespace placid {

/// Largest rank a Subset can address.
inline constexpr int kMaxSubsetRank = 31;

/// A subset of [1, kMaxSubsetRank], stored as a bitmask (bit i-1 <-> i).
class Subset {
 public:
  using Mask = std::uint32_t;

  constexpr Subset() = default;
  constexpr explicit Subset(Mask bits) : bits_(bits) {}

  /// Throws std::invalid_argument on elements outside [1, kMaxSubsetRank].
  static Subset of(std::initializer_list<int> elements);
  static Subset of(std::span<const int> elements);

  constexpr Mask bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int x) const {
    return x >= 1 && x <= kMaxSubsetRank && ((bits_ >> (x - 1)) & 1U) != 0;
  }
  /// Largest element, 0 for the empty set.
  constexpr int max_element() const { return 32 - std::countl_zero(bits_); }
  /// True when every element lies in [1, n].
  constexpr bool within(int n) const {
    return n >= kMaxSubsetRank || (bits_ >> n) == 0;
  }

  /// Elements in increasing order.
  std::vector<int> elements() const;

  /// S^i, the i-th smallest element (1-based). Throws std::out_of_range.
  int nth(int i) const;

  constexpr Subset with(int x) const { return Subset(bits_ | (Mask{1} << (x - 1))); }
  constexpr Subset without(int x) const { return Subset(bits_ & ~(Mask{1} << (x - 1))); }

  friend constexpr bool operator==(Subset, Subset) = default;

 private:
  Mask bits_ = 0;
};

/// "{1,3,4}"; the empty set is "{}".
std::string format_subset(Subset s);
/// Inverse of format_subset; whitespace is tolerated. Throws std::invalid_argument.
Subset parse_subset(std::string_view text);

bool subset_leq(Subset s, Subset t);
/// Strict order: s <= t and s != t.
bool subset_less(Subset s, Subset t);

Subset meet(Subset s, Subset t);
Subset join(Subset s, Subset t);

/// Ordering used to index matrices: by cardinality, then lexicographically on
/// the increasing element lists. A total order, unrelated to subset_leq.
bool canonical_less(Subset a, Subset b);

/// All of 2^[n] in canonical order. The index of a set in this vector is its
/// row/column in every representation matrix of rank n.
std::vector<Subset> canonical_subsets(int n);

/// All M in 2^[n] with s <= M <= t, in canonical order.
/// Throws std::invalid_argument unless s <= t and both lie in [n].
std::vector<Subset> enumerate_interval(Subset s, Subset t, int n);

/// Union of all sets in [s, t].
Subset interval_union(Subset s, Subset t, int n);

/// Maximum t such that s = P_1 < ... < P_t = t; 1 when s == t.
/// Requires |s| == |t| and s <= t, otherwise throws std::invalid_argument.
int chain_length(Subset s, Subset t);

/// Letter multiplicities |w|_x of a word over [n].
class WordCounts {
 public:
  explicit WordCounts(int rank);
  WordCounts(const Word& w, int rank);
  /// counts[i] is |w|_{i+1}; rank is counts.size(). Negative counts throw.
  static WordCounts from_counts(std::vector<std::int64_t> counts);

  int rank() const { return static_cast<int>(counts_.size()); }
  std::int64_t count(Letter x) const;
  /// |w|_N = sum of |w|_i over i in N.
  std::int64_t count_of_set(Subset s) const;

 private:
  std::vector<std::int64_t> counts_;
};

/// Given |s| == |t| and s < t, returns N in [s, t] with N != s,
/// |w|_N >= min(|w|_s, |w|_t), and chain_length(s, N) <= rank. When the
/// whole interval is already short, N = t; otherwise exactly one element of
/// s \ t is traded for its partner in t \ s (least valid index).
Subset split(const WordCounts& w, Subset s, Subset t);

/// Requires |w|_s <= |w|_t. Returns N in [s, t] with N != s,
/// chain_length(s, N) <= rank and |w|_M <= |w|_N for every M in [s, N].
Subset split_apply_increasing(const WordCounts& w, Subset s, Subset t);

/// Requires |w|_t <= |w|_s. Returns N in [s, t] with N != t,
/// chain_length(N, t) <= rank and |w|_M <= |w|_N for every M in [N, t].
Subset split_apply_decreasing(const WordCounts& w, Subset s, Subset t);

}  // namespace placid

template <>
struct std::hash<placid::Subset> {
  std::size_t operator()(placid::Subset s) const noexcept {
    return std::hash<placid::Subset::Mask>{}(s.bits());
  }
};
