#pragma once

// Brute-force reference implementations. Each one recomputes a quantity the
// core library produces, by plain enumeration and without calling the
// routine it checks. Only tests, the acceptance suite and `bench` use them.

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "placid/subset_lattice.hpp"
#include "placid/tropical.hpp"
#include "placid/words.hpp"

namespace placid::oracle {

/// All subsets M of [n] with s <= M <= t, found by filtering 2^[n].
std::vector<Subset> interval_by_filter(Subset s, Subset t, int n);

/// Greatest lower bound / least upper bound in 2^[n], by search.
Subset glb(Subset s, Subset t, int n);
Subset lub(Subset s, Subset t, int n);

/// Longest strict chain from s to t among the sets of 2^[n].
int longest_chain(Subset s, Subset t, int n);

/// Neighbours under one Knuth rewrite, found by instantiating every
/// relation (a, b, c) over [n] and matching both sides at every position.
std::set<Word> knuth_neighbors_by_relations(const Word& w, int n);

/// Closure of {w} under Knuth rewrites (breadth-first).
std::set<Word> knuth_class(const Word& w, int n);

/// Whether u can be read from s to t: some s <= P_1 <= ... <= P_k <= t in
/// 2^[n] with u_i in P_i. Depth-first over the sets.
bool readable(const Word& u, Subset s, Subset t, int n);

/// Longest scattered subword of w readable from s to t, over all 2^|w|
/// subsequences.
std::int64_t readable_length(const Word& w, Subset s, Subset t, int n);

/// Heaviest path from i to j labelled by `labels` (over {a,b}: a -> x,
/// b -> y), over every vertex sequence.
Trop path_max(const TropMatrix& x, const TropMatrix& y, std::string_view labels, std::size_t i,
              std::size_t j);

/// Length of the shortest word over {a,b} passing verify_q's invariants,
/// searched length by length up to max_len; 0 if none exists.
std::size_t min_q_length(int n, bool constrained, std::size_t max_len);

/// Empty when N satisfies split's three postconditions for (w, s, t).
std::string split_violation(const WordCounts& w, Subset s, Subset t, Subset n_set);
std::string split_increasing_violation(const WordCounts& w, Subset s, Subset t, Subset n_set);
std::string split_decreasing_violation(const WordCounts& w, Subset s, Subset t, Subset n_set);

}  // namespace placid::oracle
