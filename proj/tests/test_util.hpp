#pragma once

#include <utility>
#include <vector>

#include "placid/rng.hpp"
#include "placid/subset_lattice.hpp"
#include "placid/words.hpp"

namespace testutil {

inline placid::Word random_word(placid::Rng& rng, int n, int min_len, int max_len) {
  placid::Word w(static_cast<std::size_t>(placid::uniform_int(rng, min_len, max_len)));
  for (auto& x : w) x = static_cast<placid::Letter>(placid::uniform_int(rng, 1, n));
  return w;
}

inline placid::Subset random_subset(placid::Rng& rng, int n, int k) {
  placid::Subset s;
  while (s.size() < k) s = s.with(static_cast<int>(placid::uniform_int(rng, 1, n)));
  return s;
}

/// S <= T of equal size, drawn by rejection.
inline std::pair<placid::Subset, placid::Subset> random_pair(placid::Rng& rng, int n, bool strict) {
  while (true) {
    const int k = static_cast<int>(placid::uniform_int(rng, 1, n - 1));
    auto s = random_subset(rng, n, k);
    auto t = random_subset(rng, n, k);
    if (placid::subset_leq(t, s)) std::swap(s, t);
    if (placid::subset_leq(s, t) && !(strict && s == t)) return {s, t};
  }
}

inline std::vector<placid::Subset> all_subsets(int n) {
  std::vector<placid::Subset> out;
  for (placid::Subset::Mask m = 0; m < (placid::Subset::Mask{1} << n); ++m) out.emplace_back(m);
  return out;
}

}  // namespace testutil
