#include "placid/plactic_rep.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "placid/rng.hpp"

namespace placid {

PlacticRep::PlacticRep(int rank)
    : rank_(rank), identity_(1) {
  if (rank < 1 || rank > kMaxRepRank) {
    throw std::invalid_argument("PlacticRep: rank " + std::to_string(rank) + " outside [1, " +
                                std::to_string(kMaxRepRank) + "]");
  }
  labels_ = canonical_subsets(rank);
  const std::size_t d = labels_.size();
  index_.assign(d, 0);
  for (std::size_t i = 0; i < d; ++i) index_[labels_[i].bits()] = i;

  identity_ = TropMatrix(d);
  std::vector<TropMatrix> gens(static_cast<std::size_t>(rank), TropMatrix(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Subset p = labels_[i], q = labels_[j];
      if (p.size() != q.size() || !subset_leq(p, q)) continue;
      identity_(i, j) = Trop::zero();
      const Subset u = interval_union(p, q, rank);
      for (Letter x = 1; x <= rank; ++x) {
        gens[static_cast<std::size_t>(x - 1)](i, j) = Trop{u.contains(x) ? 1 : 0};
      }
    }
  }
  identity_.set_labels(labels_);
  for (auto& g : gens) g.set_labels(labels_);
  generators_ = std::move(gens);
}

std::size_t PlacticRep::index_of(Subset s) const {
  if (!s.within(rank_)) {
    throw std::invalid_argument("PlacticRep::index_of: " + format_subset(s) + " not in 2^[" +
                                std::to_string(rank_) + "]");
  }
  return index_[s.bits()];
}

const TropMatrix& PlacticRep::generator(Letter x) const {
  if (x < 1 || x > rank_) {
    throw std::invalid_argument("PlacticRep::generator: letter " + std::to_string(x) +
                                " outside [1, " + std::to_string(rank_) + "]");
  }
  return generators_[static_cast<std::size_t>(x - 1)];
}

TropMatrix PlacticRep::word(const Word& w) const {
  require_letters_in_rank(w, rank_);
  if (w.empty()) return identity_;
  TropMatrix acc = generator(w.front());
  for (std::size_t i = 1; i < w.size(); ++i) acc = trop_mul(acc, generator(w[i]));
  return acc;
}

TropMatrix rho_generator(int n, Letter x) { return PlacticRep(n).generator(x); }
TropMatrix rho_identity(int n) { return PlacticRep(n).identity(); }
TropMatrix rho_word(int n, const Word& w) {
  require_letters_in_rank(w, n);
  return PlacticRep(n).word(w);
}

std::int64_t max_readable_length(const Word& w, Subset s, Subset t) {
  if (s.size() != t.size() || !subset_leq(s, t)) {
    throw std::invalid_argument("max_readable_length: requires |S| = |T| and S <= T, got " +
                                format_subset(s) + ", " + format_subset(t));
  }
  const int universe = std::max(t.max_element(), 1);
  const auto sets = enumerate_interval(s, t, universe);
  const std::size_t m = sets.size();
  // below[j]: indices i with sets[i] <= sets[j] (including j itself).
  std::vector<std::vector<std::size_t>> below(m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      if (subset_leq(sets[i], sets[j])) below[j].push_back(i);
    }
  }
  // best[j]: most letters read so far along a chain whose last set is <= sets[j].
  std::vector<std::int64_t> best(m, 0), next(m);
  for (Letter x : w) {
    for (std::size_t j = 0; j < m; ++j) {
      next[j] = best[j];
      for (std::size_t i : below[j]) {
        if (sets[i].contains(x)) next[j] = std::max(next[j], best[i] + 1);
      }
    }
    best.swap(next);
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (sets[j] == t) return best[j];
  }
  throw std::logic_error("max_readable_length: upper end missing from its interval");
}

std::vector<Word> all_words(int n, int len) {
  std::vector<Word> out;
  Word cur(static_cast<std::size_t>(len), 1);
  if (n < 1) return len == 0 ? std::vector<Word>{Word{}} : out;
  while (true) {
    out.push_back(cur);
    int i = len - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n) cur[static_cast<std::size_t>(i--)] = 1;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
  }
  return out;
}

FaithfulnessReport faithfulness_check(int n, int max_len, std::size_t exhaustive_limit,
                                      std::size_t samples, std::uint64_t seed) {
  const PlacticRep rep(n);
  FaithfulnessReport report;
  report.rank = n;
  report.max_len = max_len;
  report.seed = seed;

  std::size_t total = 0, layer = 1;
  for (int len = 0; len <= max_len; ++len, layer *= static_cast<std::size_t>(n)) {
    total += layer;
    if (total > exhaustive_limit) break;
  }
  report.exhaustive = total <= exhaustive_limit;

  std::vector<Word> words;
  if (report.exhaustive) {
    for (int len = 0; len <= max_len; ++len) {
      auto layer_words = all_words(n, len);
      words.insert(words.end(), layer_words.begin(), layer_words.end());
    }
  } else {
    for (std::size_t i = 0; i < samples; ++i) {
      Rng rng = stream_rng(seed, i);
      Word w(uniform_below(rng, static_cast<std::uint64_t>(max_len) + 1));
      for (auto& x : w) x = static_cast<Letter>(1 + uniform_below(rng, static_cast<std::uint64_t>(n)));
      // Pair every sample with a Knuth neighbour so equal classes are exercised.
      const auto nbs = knuth_neighbors(w);
      words.push_back(w);
      if (!nbs.empty()) {
        auto it = nbs.begin();
        std::advance(it, static_cast<std::ptrdiff_t>(uniform_below(rng, nbs.size())));
        words.push_back(*it);
      }
    }
  }
  report.words_checked = words.size();

  // A violation is a word whose matrix class and tableau class disagree with
  // those of the first word seen in either class.
  std::map<TropMatrix, std::pair<Tableau, Word>> by_matrix;
  std::map<Tableau, std::pair<TropMatrix, Word>> by_tableau;
  for (const Word& w : words) {
    TropMatrix m = rep.word(w);
    Tableau t = tableau_of_word(w);
    auto [mit, m_new] = by_matrix.try_emplace(m, t, w);
    auto [tit, t_new] = by_tableau.try_emplace(t, m, w);
    if (!m_new && mit->second.first != t) report.violations.emplace_back(mit->second.second, w);
    if (!t_new && !(tit->second.first == m)) report.violations.emplace_back(tit->second.second, w);
  }
  report.classes = by_tableau.size();
  return report;
}

}  // namespace placid
