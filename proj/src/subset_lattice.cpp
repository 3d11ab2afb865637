#include "placid/subset_lattice.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace placid {

namespace {

void require_rank(int n) {
  if (n < 0 || n > kMaxSubsetRank) {
    throw std::invalid_argument("rank " + std::to_string(n) + " outside [0, " +
                                std::to_string(kMaxSubsetRank) + "]");
  }
}

Subset from_sorted(const std::vector<int>& xs) {
  Subset s;
  for (int x : xs) s = s.with(x);
  return s;
}

// Appends to `out` every set M with |M| == size, lo[i] <= M^i <= hi[i].
// `lo`/`hi` must have at least `size` entries.
void collect_between(const std::vector<int>& lo, const std::vector<int>& hi, int size,
                     std::vector<Subset>& out) {
  std::vector<int> cur(static_cast<std::size_t>(size));
  auto rec = [&](auto&& self, int i, int floor) -> void {
    if (i == size) {
      out.push_back(from_sorted(cur));
      return;
    }
    const auto ui = static_cast<std::size_t>(i);
    for (int x = std::max(lo[ui], floor); x <= hi[ui]; ++x) {
      cur[ui] = x;
      self(self, i + 1, x + 1);
    }
  };
  rec(rec, 0, 1);
}

std::int64_t element_sum(Subset s) {
  const auto xs = s.elements();
  return std::accumulate(xs.begin(), xs.end(), std::int64_t{0});
}

// Equal-size interval [s, t], sorted so that P < M implies P comes first.
std::vector<Subset> equal_size_interval(Subset s, Subset t) {
  const auto se = s.elements(), te = t.elements();
  std::vector<Subset> items;
  collect_between(se, te, s.size(), items);
  std::stable_sort(items.begin(), items.end(), [](Subset a, Subset b) {
    const auto sa = element_sum(a), sb = element_sum(b);
    return sa != sb ? sa < sb : canonical_less(a, b);
  });
  return items;
}

void require_equal_size_strict(Subset s, Subset t, const char* who) {
  if (s.size() != t.size() || !subset_less(s, t)) {
    throw std::invalid_argument(std::string(who) + ": requires |S| = |T| and S < T, got " +
                                format_subset(s) + ", " + format_subset(t));
  }
}

// First element of `items` with no other element of `items` strictly below it.
Subset first_minimal(const std::vector<Subset>& items) {
  for (Subset c : items) {
    if (std::none_of(items.begin(), items.end(), [&](Subset d) { return subset_less(d, c); })) {
      return c;
    }
  }
  throw std::logic_error("first_minimal: empty candidate set");
}

Subset first_maximal(const std::vector<Subset>& items) {
  for (Subset c : items) {
    if (std::none_of(items.begin(), items.end(), [&](Subset d) { return subset_less(c, d); })) {
      return c;
    }
  }
  throw std::logic_error("first_maximal: empty candidate set");
}

// Canonically ordered members of the equal-size interval [lo, hi].
std::vector<Subset> canonical_interval(Subset lo, Subset hi) {
  auto items = equal_size_interval(lo, hi);
  std::sort(items.begin(), items.end(), canonical_less);
  return items;
}

}  // namespace

Subset Subset::of(std::initializer_list<int> elements) {
  return of(std::span<const int>(elements.begin(), elements.size()));
}

Subset Subset::of(std::span<const int> elements) {
  Subset s;
  for (int x : elements) {
    if (x < 1 || x > kMaxSubsetRank) {
      throw std::invalid_argument("subset element " + std::to_string(x) + " out of range");
    }
    s = s.with(x);
  }
  return s;
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Mask b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

int Subset::nth(int i) const {
  if (i < 1 || i > size()) {
    throw std::out_of_range("Subset::nth: index " + std::to_string(i) + " of set of size " +
                            std::to_string(size()));
  }
  Mask b = bits_;
  for (int k = 1; k < i; ++k) b &= b - 1;
  return std::countr_zero(b) + 1;
}

std::string format_subset(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int x : s.elements()) {
    if (!first) out += ',';
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

Subset parse_subset(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact.size() < 2 || compact.front() != '{' || compact.back() != '}') {
    throw std::invalid_argument("parse_subset: expected '{...}', got '" + std::string(text) + "'");
  }
  std::vector<int> xs;
  std::string_view body(compact);
  body = body.substr(1, body.size() - 2);
  while (!body.empty()) {
    const auto comma = body.find(',');
    const auto tok = body.substr(0, comma);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw std::invalid_argument("parse_subset: bad element '" + std::string(tok) + "'");
    }
    xs.push_back(v);
    if (comma == std::string_view::npos) break;
    body = body.substr(comma + 1);
    if (body.empty()) throw std::invalid_argument("parse_subset: trailing comma");
  }
  const Subset s = Subset::of(xs);
  if (s.size() != static_cast<int>(xs.size())) {
    throw std::invalid_argument("parse_subset: repeated element in '" + std::string(text) + "'");
  }
  return s;
}

bool subset_leq(Subset s, Subset t) {
  if (s.size() < t.size()) return false;
  Subset::Mask a = s.bits(), b = t.bits();
  while (b != 0) {
    if (std::countr_zero(a) > std::countr_zero(b)) return false;
    a &= a - 1;
    b &= b - 1;
  }
  return true;
}

bool subset_less(Subset s, Subset t) { return s != t && subset_leq(s, t); }

Subset meet(Subset s, Subset t) {
  const auto se = s.elements(), te = t.elements();
  const std::size_t k = std::min(se.size(), te.size());
  Subset out;
  for (std::size_t i = 0; i < k; ++i) out = out.with(std::min(se[i], te[i]));
  const auto& longer = se.size() >= te.size() ? se : te;
  for (std::size_t i = k; i < longer.size(); ++i) out = out.with(longer[i]);
  return out;
}

Subset join(Subset s, Subset t) {
  const auto se = s.elements(), te = t.elements();
  const std::size_t k = std::min(se.size(), te.size());
  Subset out;
  for (std::size_t i = 0; i < k; ++i) out = out.with(std::max(se[i], te[i]));
  return out;
}

bool canonical_less(Subset a, Subset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  // Lexicographic on increasing element lists: compare at the lowest
  // differing bit; whichever set owns it has the smaller element there.
  const Subset::Mask diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const Subset::Mask low = diff & (~diff + 1);
  return (a.bits() & low) != 0;
}

std::vector<Subset> canonical_subsets(int n) {
  require_rank(n);
  if (n > 24) throw std::invalid_argument("canonical_subsets: rank too large to enumerate");
  std::vector<Subset> out;
  out.reserve(std::size_t{1} << n);
  for (Subset::Mask m = 0; m < (Subset::Mask{1} << n); ++m) out.emplace_back(m);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<Subset> enumerate_interval(Subset s, Subset t, int n) {
  require_rank(n);
  if (!s.within(n) || !t.within(n)) {
    throw std::invalid_argument("enumerate_interval: sets must lie in [" + std::to_string(n) + "]");
  }
  if (!subset_leq(s, t)) {
    throw std::invalid_argument("enumerate_interval: " + format_subset(s) + " is not <= " +
                                format_subset(t));
  }
  const auto se = s.elements(), te = t.elements();
  std::vector<Subset> out;
  for (int m = t.size(); m <= s.size(); ++m) {
    // M^i in [S^i, T^i] for i <= |T| and M^i in [S^i, n] beyond.
    std::vector<int> hi(static_cast<std::size_t>(m), n);
    std::copy(te.begin(), te.end(), hi.begin());
    collect_between(se, hi, m, out);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

Subset interval_union(Subset s, Subset t, int n) {
  Subset u;
  for (Subset m : enumerate_interval(s, t, n)) u = Subset(u.bits() | m.bits());
  return u;
}

int chain_length(Subset s, Subset t) {
  if (s.size() != t.size() || !subset_leq(s, t)) {
    throw std::invalid_argument("chain_length: requires |S| = |T| and S <= T, got " +
                                format_subset(s) + ", " + format_subset(t));
  }
  const auto items = equal_size_interval(s, t);
  // Longest chain ending at each item, starting from s (which sorts first).
  std::vector<int> longest(items.size(), 0);
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i] == s) {
      longest[i] = 1;
      continue;
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (longest[j] > 0 && subset_less(items[j], items[i])) {
        longest[i] = std::max(longest[i], longest[j] + 1);
      }
    }
  }
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i] == t) return longest[i];
  }
  throw std::logic_error("chain_length: upper end missing from its own interval");
}

WordCounts::WordCounts(int rank) {
  require_rank(rank);
  counts_.assign(static_cast<std::size_t>(rank), 0);
}

WordCounts::WordCounts(const Word& w, int rank) : WordCounts(rank) {
  require_letters_in_rank(w, rank);
  for (Letter x : w) ++counts_[static_cast<std::size_t>(x - 1)];
}

WordCounts WordCounts::from_counts(std::vector<std::int64_t> counts) {
  WordCounts out(static_cast<int>(counts.size()));
  for (auto c : counts) {
    if (c < 0) throw std::invalid_argument("WordCounts: negative count");
  }
  out.counts_ = std::move(counts);
  return out;
}

std::int64_t WordCounts::count(Letter x) const {
  if (x < 1 || x > rank()) return 0;
  return counts_[static_cast<std::size_t>(x - 1)];
}

std::int64_t WordCounts::count_of_set(Subset s) const {
  std::int64_t total = 0;
  for (int x : s.elements()) total += count(x);
  return total;
}

Subset split(const WordCounts& w, Subset s, Subset t) {
  require_equal_size_strict(s, t, "split");
  const int n = w.rank();
  if (!s.within(n) || !t.within(n)) throw std::invalid_argument("split: sets outside rank");
  if (chain_length(s, t) <= n) return t;

  const auto s_only = Subset(s.bits() & ~t.bits()).elements();
  const auto t_only = Subset(t.bits() & ~s.bits()).elements();
  const std::int64_t floor = std::min<std::int64_t>(0, w.count_of_set(t) - w.count_of_set(s));
  for (std::size_t i = 0; i < s_only.size(); ++i) {
    if (w.count(t_only[i]) - w.count(s_only[i]) >= floor) {
      return s.without(s_only[i]).with(t_only[i]);
    }
  }
  // The differences sum to |w|_T - |w|_S >= floor, so some index qualifies.
  throw std::logic_error("split: no exchange index found");
}

Subset split_apply_increasing(const WordCounts& w, Subset s, Subset t) {
  require_equal_size_strict(s, t, "split_apply_increasing");
  if (w.count_of_set(s) > w.count_of_set(t)) {
    throw std::invalid_argument("split_apply_increasing: requires |w|_S <= |w|_T");
  }
  const Subset first = split(w, s, t);
  const std::int64_t target = w.count_of_set(first);
  std::vector<Subset> candidates;
  for (Subset m : canonical_interval(s, first)) {
    if (m != s && w.count_of_set(m) >= target) candidates.push_back(m);
  }
  return first_minimal(candidates);
}

Subset split_apply_decreasing(const WordCounts& w, Subset s, Subset t) {
  require_equal_size_strict(s, t, "split_apply_decreasing");
  if (w.count_of_set(t) > w.count_of_set(s)) {
    throw std::invalid_argument("split_apply_decreasing: requires |w|_T <= |w|_S");
  }
  const int n = w.rank();
  Subset base = s;
  int remaining = chain_length(base, t);
  while (remaining > n) {
    const Subset next = split(w, base, t);
    const int next_remaining = chain_length(next, t);
    if (next_remaining >= remaining) {
      throw std::logic_error("split_apply_decreasing: chain length did not decrease");
    }
    base = next;
    remaining = next_remaining;
  }
  const std::int64_t target = w.count_of_set(base);
  std::vector<Subset> candidates;
  for (Subset m : canonical_interval(base, t)) {
    if (m != t && w.count_of_set(m) >= target) candidates.push_back(m);
  }
  return first_maximal(candidates);
}

}  // namespace placid
