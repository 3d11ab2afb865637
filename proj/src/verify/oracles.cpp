#include "placid/verify/oracles.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <stdexcept>

namespace placid::oracle {

namespace {

std::vector<Subset> power_set(int n) {
  std::vector<Subset> out;
  for (Subset::Mask m = 0; m < (Subset::Mask{1} << n); ++m) out.emplace_back(m);
  return out;
}

bool in_interval(Subset m, Subset s, Subset t) { return subset_leq(s, m) && subset_leq(m, t); }

}  // namespace

std::vector<Subset> interval_by_filter(Subset s, Subset t, int n) {
  std::vector<Subset> out;
  for (Subset m : power_set(n)) {
    if (in_interval(m, s, t)) out.push_back(m);
  }
  return out;
}

Subset glb(Subset s, Subset t, int n) {
  const auto all = power_set(n);
  std::vector<Subset> lower;
  for (Subset m : all) {
    if (subset_leq(m, s) && subset_leq(m, t)) lower.push_back(m);
  }
  for (Subset c : lower) {
    if (std::all_of(lower.begin(), lower.end(), [&](Subset d) { return subset_leq(d, c); })) return c;
  }
  throw std::logic_error("oracle::glb: no greatest lower bound");
}

Subset lub(Subset s, Subset t, int n) {
  const auto all = power_set(n);
  std::vector<Subset> upper;
  for (Subset m : all) {
    if (subset_leq(s, m) && subset_leq(t, m)) upper.push_back(m);
  }
  for (Subset c : upper) {
    if (std::all_of(upper.begin(), upper.end(), [&](Subset d) { return subset_leq(c, d); })) return c;
  }
  throw std::logic_error("oracle::lub: no least upper bound");
}

int longest_chain(Subset s, Subset t, int n) {
  const auto items = interval_by_filter(s, t, n);
  std::map<Subset::Mask, int> memo;  // longest chain from a set up to t
  auto rec = [&](auto&& self, Subset m) -> int {
    if (m == t) return 1;
    if (auto it = memo.find(m.bits()); it != memo.end()) return it->second;
    int best = 0;
    for (Subset next : items) {
      if (subset_less(m, next)) {
        const int sub = self(self, next);
        if (sub > 0) best = std::max(best, sub + 1);
      }
    }
    memo[m.bits()] = best;
    return best;
  };
  return rec(rec, s);
}

std::set<Word> knuth_neighbors_by_relations(const Word& w, int n) {
  std::vector<std::pair<Word, Word>> rules;
  for (Letter a = 1; a <= n; ++a) {
    for (Letter b = 1; b <= n; ++b) {
      for (Letter c = 1; c <= n; ++c) {
        if (a < b && b <= c) rules.push_back({{b, c, a}, {b, a, c}});
        if (a <= b && b < c) rules.push_back({{c, a, b}, {a, c, b}});
      }
    }
  }
  std::set<Word> out;
  for (std::size_t i = 0; i + 3 <= w.size(); ++i) {
    const Word window(w.begin() + static_cast<std::ptrdiff_t>(i),
                      w.begin() + static_cast<std::ptrdiff_t>(i + 3));
    for (const auto& [l, r] : rules) {
      for (const auto* from : {&l, &r}) {
        if (window != *from) continue;
        Word nb = w;
        const Word& to = from == &l ? r : l;
        std::copy(to.begin(), to.end(), nb.begin() + static_cast<std::ptrdiff_t>(i));
        out.insert(std::move(nb));
      }
    }
  }
  return out;
}

std::set<Word> knuth_class(const Word& w, int n) {
  std::set<Word> seen{w};
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    const Word cur = queue.front();
    queue.pop_front();
    for (const Word& nb : knuth_neighbors_by_relations(cur, n)) {
      if (seen.insert(nb).second) queue.push_back(nb);
    }
  }
  return seen;
}

bool readable(const Word& u, Subset s, Subset t, int n) {
  const auto sets = interval_by_filter(s, t, n);
  auto rec = [&](auto&& self, std::size_t i, Subset floor) -> bool {
    if (i == u.size()) return true;
    for (Subset p : sets) {
      if (subset_leq(floor, p) && p.contains(u[i]) && self(self, i + 1, p)) return true;
    }
    return false;
  };
  return rec(rec, 0, s);
}

std::int64_t readable_length(const Word& w, Subset s, Subset t, int n) {
  if (w.size() > 20) throw std::invalid_argument("oracle::readable_length: word too long");
  std::int64_t best = 0;
  for (std::uint32_t mask = 0; mask < (1U << w.size()); ++mask) {
    const auto len = static_cast<std::int64_t>(std::popcount(mask));
    if (len <= best) continue;
    Word u;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if ((mask >> i) & 1U) u.push_back(w[i]);
    }
    if (readable(u, s, t, n)) best = len;
  }
  return best;
}

Trop path_max(const TropMatrix& x, const TropMatrix& y, std::string_view labels, std::size_t i,
              std::size_t j) {
  const std::size_t d = x.dim();
  const std::size_t inner = labels.empty() ? 0 : labels.size() - 1;
  std::vector<std::size_t> mid(inner, 0);
  Trop best;
  while (true) {
    Trop w = Trop::zero();
    std::size_t prev = i;
    for (std::size_t k = 0; k < labels.size(); ++k) {
      const std::size_t next = k < inner ? mid[k] : j;
      const TropMatrix& m = labels[k] == 'a' ? x : y;
      w = w * m(prev, next);
      prev = next;
    }
    best = best + w;
    std::size_t k = 0;
    while (k < inner && ++mid[k] == d) mid[k++] = 0;
    if (k == inner) break;
  }
  return best;
}

std::size_t min_q_length(int n, bool constrained, std::size_t max_len) {
  const auto k = static_cast<std::size_t>(n - 1);
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << len); ++code) {
      std::string q;
      for (std::size_t i = 0; i < len; ++i) q += ((code >> i) & 1U) ? 'b' : 'a';
      bool ok = true;
      for (std::uint64_t f = 0; ok && f < (std::uint64_t{1} << k); ++f) {
        std::string factor;
        for (std::size_t i = 0; i < k; ++i) factor += ((f >> i) & 1U) ? 'b' : 'a';
        ok = q.find(factor) != std::string::npos;
      }
      if (ok && constrained) {
        ok = q.front() == 'b' && q.size() >= k && q.substr(q.size() - k) == std::string(k, 'a') &&
             q.find(std::string(k + 1, 'a')) == std::string::npos;
      }
      if (ok) return len;
    }
  }
  return 0;
}

namespace {

std::string describe(const char* what, Subset s, Subset t, Subset n_set) {
  return std::string(what) + " for S=" + format_subset(s) + " T=" + format_subset(t) +
         " N=" + format_subset(n_set);
}

bool member(const std::vector<Subset>& xs, Subset m) {
  return std::find(xs.begin(), xs.end(), m) != xs.end();
}

}  // namespace

std::string split_violation(const WordCounts& w, Subset s, Subset t, Subset n_set) {
  const int n = w.rank();
  if (!member(interval_by_filter(s, t, n), n_set)) return describe("N outside [S,T]", s, t, n_set);
  if (n_set == s) return describe("N equals S", s, t, n_set);
  if (w.count_of_set(n_set) < std::min(w.count_of_set(s), w.count_of_set(t))) {
    return describe("count of N below min(count S, count T)", s, t, n_set);
  }
  if (longest_chain(s, n_set, n) > n) return describe("chain length of [S,N] exceeds n", s, t, n_set);
  return {};
}

std::string split_increasing_violation(const WordCounts& w, Subset s, Subset t, Subset n_set) {
  const int n = w.rank();
  if (!member(interval_by_filter(s, t, n), n_set)) return describe("N outside [S,T]", s, t, n_set);
  if (n_set == s) return describe("N equals S", s, t, n_set);
  if (longest_chain(s, n_set, n) > n) return describe("chain length of [S,N] exceeds n", s, t, n_set);
  for (Subset m : interval_by_filter(s, n_set, n)) {
    if (w.count_of_set(m) > w.count_of_set(n_set)) {
      return describe(("heavier set " + format_subset(m) + " in [S,N]").c_str(), s, t, n_set);
    }
  }
  return {};
}

std::string split_decreasing_violation(const WordCounts& w, Subset s, Subset t, Subset n_set) {
  const int n = w.rank();
  if (!member(interval_by_filter(s, t, n), n_set)) return describe("N outside [S,T]", s, t, n_set);
  if (n_set == t) return describe("N equals T", s, t, n_set);
  if (longest_chain(n_set, t, n) > n) return describe("chain length of [N,T] exceeds n", s, t, n_set);
  for (Subset m : interval_by_filter(n_set, t, n)) {
    if (w.count_of_set(m) > w.count_of_set(n_set)) {
      return describe(("heavier set " + format_subset(m) + " in [N,T]").c_str(), s, t, n_set);
    }
  }
  return {};
}

}  // namespace placid::oracle
