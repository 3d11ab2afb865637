#include "placid/identity_checker.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "placid/plactic_rep.hpp"
#include "placid/rng.hpp"

namespace placid {

namespace {

struct SampleRun {
  std::optional<std::uint64_t> hit;
  std::uint64_t samples_run = 0;
  bool budget_exhausted = false;
};

// Runs test(i) for i in [0, total) until one returns true. Chunks are handed
// out in increasing order and every index below the best hit so far is
// still evaluated, so the reported hit is the least one.
template <class Test>
SampleRun run_samples(std::uint64_t total, const RunLimits& limits, Test&& test) {
  using Clock = std::chrono::steady_clock;
  constexpr std::uint64_t kChunk = 32;
  const auto deadline =
      Clock::now() + std::chrono::duration_cast<Clock::duration>(
                         std::chrono::duration<double>(std::max(0.0, limits.budget_seconds)));

  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{total};
  std::atomic<std::uint64_t> processed{0};
  std::atomic<bool> out_of_time{false};
  std::exception_ptr failure;
  std::mutex failure_mu;

  auto worker = [&] {
    try {
      while (true) {
        const std::uint64_t start = next.fetch_add(kChunk);
        if (start >= total || start >= best.load()) return;
        if (Clock::now() > deadline) {
          out_of_time = true;
          return;
        }
        const std::uint64_t stop = std::min(start + kChunk, total);
        for (std::uint64_t i = start; i < stop && i < best.load(); ++i) {
          processed.fetch_add(1);
          if (test(i)) {
            std::uint64_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
            break;
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mu);
      if (!failure) failure = std::current_exception();
      best = 0;
    }
  };

  unsigned threads = limits.threads ? limits.threads : std::thread::hardware_concurrency();
  threads = std::max(1U, threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  SampleRun run;
  run.budget_exhausted = out_of_time.load();
  if (best.load() < total) {
    run.hit = best.load();
    run.samples_run = *run.hit + 1;
  } else {
    run.samples_run = processed.load();
  }
  return run;
}

Word random_word(Rng& rng, int n, int max_len) {
  Word w(uniform_below(rng, static_cast<std::uint64_t>(max_len) + 1));
  for (auto& x : w) x = static_cast<Letter>(1 + uniform_below(rng, static_cast<std::uint64_t>(n)));
  return w;
}

// Words of length <= max_len over [n], ordered by length then lexicographically.
class WordIndex {
 public:
  WordIndex(int n, int max_len) : n_(static_cast<std::uint64_t>(n)) {
    std::uint64_t layer = 1;
    for (int len = 0; len <= max_len; ++len) {
      layers_.push_back(layer);
      if (total_ > std::numeric_limits<std::uint64_t>::max() / 4 - layer) {
        throw std::invalid_argument("exhaustive strategy: too many words");
      }
      total_ += layer;
      layer *= n_;
    }
  }

  std::uint64_t size() const { return total_; }

  Word at(std::uint64_t idx) const {
    std::size_t len = 0;
    while (idx >= layers_[len]) idx -= layers_[len++];
    Word w(len);
    for (std::size_t i = len; i-- > 0;) {
      w[i] = static_cast<Letter>(1 + idx % n_);
      idx /= n_;
    }
    return w;
  }

 private:
  std::uint64_t n_;
  std::uint64_t total_ = 0;
  std::vector<std::uint64_t> layers_;
};

void require_rank(int n) {
  if (n < 1) throw std::invalid_argument("rank must be at least 1, got " + std::to_string(n));
}

std::optional<std::pair<std::size_t, std::size_t>> first_difference(const TropMatrix& a,
                                                                    const TropMatrix& b) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (a(i, j) != b(i, j)) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

TropMatrix eval_or_identity(std::string_view w, const TropMatrix& x, const TropMatrix& y) {
  return w.empty() ? TropMatrix::identity(x.dim()) : eval_word(w, x, y);
}

}  // namespace

PlacticStrategy PlacticStrategy::exhaustive(int max_word_len) {
  PlacticStrategy s;
  s.kind = Kind::Exhaustive;
  s.max_word_len = max_word_len;
  s.samples = 0;
  return s;
}

PlacticStrategy PlacticStrategy::random(std::uint64_t samples, int max_word_len,
                                        std::uint64_t seed) {
  PlacticStrategy s;
  s.kind = Kind::Random;
  s.samples = samples;
  s.max_word_len = max_word_len;
  s.seed = seed;
  return s;
}

std::pair<Word, Word> sample_word_pair(int n, int max_len, std::uint64_t seed,
                                       std::uint64_t index) {
  Rng rng = stream_rng(seed, index);
  Word x = random_word(rng, n, max_len);
  Word y = random_word(rng, n, max_len);
  return {std::move(x), std::move(y)};
}

std::string PlacticCheckReport::verdict() const {
  if (counterexample) return "counterexample";
  return budget_exhausted ? "inconclusive" : "pass";
}

bool holds_at(const IdentityWords& id, const Word& x, const Word& y) {
  return plactic_equal(substitute(id.lhs, x, y), substitute(id.rhs, x, y));
}

PlacticCheckReport check_plactic(const IdentityWords& id, int n, const PlacticStrategy& strategy,
                                 const RunLimits& limits) {
  validate_identity(id);
  require_rank(n);
  if (strategy.max_word_len < 0) throw std::invalid_argument("max_word_len must be >= 0");

  PlacticCheckReport report;
  report.identity = id;
  report.rank = n;
  report.strategy = strategy;

  std::function<std::pair<Word, Word>(std::uint64_t)> pair_at;
  std::uint64_t total = 0;
  std::optional<WordIndex> index;
  if (strategy.kind == PlacticStrategy::Kind::Exhaustive) {
    index.emplace(n, strategy.max_word_len);
    const std::uint64_t words = index->size();
    if (words > (std::uint64_t{1} << 31)) throw std::invalid_argument("exhaustive strategy: too many pairs");
    total = words * words;
    pair_at = [&index, words](std::uint64_t i) {
      return std::pair{index->at(i / words), index->at(i % words)};
    };
  } else {
    total = strategy.samples;
    pair_at = [&](std::uint64_t i) {
      return sample_word_pair(n, strategy.max_word_len, strategy.seed, i);
    };
  }

  const SampleRun run = run_samples(total, limits, [&](std::uint64_t i) {
    const auto [x, y] = pair_at(i);
    return !holds_at(id, x, y);
  });
  report.samples_run = run.samples_run;
  report.budget_exhausted = run.budget_exhausted;
  if (run.hit) {
    auto [x, y] = pair_at(*run.hit);
    if (holds_at(id, x, y)) throw std::logic_error("check_plactic: counterexample did not reproduce");
    report.counterexample = PlacticCounterexample{std::move(x), std::move(y), *run.hit};
  }
  return report;
}

bool verify_witness(const TropWitness& w) {
  if (w.x.dim() != w.dim || w.y.dim() != w.dim) return false;
  if (!is_upper_triangular(w.x) || !is_upper_triangular(w.y)) return false;
  if (w.row >= w.dim || w.col >= w.dim) return false;
  const TropMatrix lhs = eval_word(w.identity.lhs, w.x, w.y);
  const TropMatrix rhs = eval_word(w.identity.rhs, w.x, w.y);
  return lhs(w.row, w.col) == w.lhs_value && rhs(w.row, w.col) == w.rhs_value &&
         w.lhs_value != w.rhs_value;
}

std::pair<TropMatrix, TropMatrix> sample_ut_pair(std::size_t k, const TropSearchConfig& config,
                                                 std::uint64_t index) {
  Rng rng = stream_rng(config.seed, index);
  if (index % 2 == 0) {
    TropMatrix x = random_ut(k, config.entry_min, config.entry_max, config.neg_inf_density, rng);
    TropMatrix y = random_ut(k, config.entry_min, config.entry_max, config.neg_inf_density, rng);
    return {std::move(x), std::move(y)};
  }
  const std::int64_t spread = std::max<std::int64_t>(1, config.entry_max - config.entry_min);
  auto structured = [&] {
    TropMatrix m(k);
    for (std::size_t i = 0; i < k; ++i) {
      m(i, i) = bernoulli(rng, 0.5) ? Trop::zero() : Trop::neg_inf();
      for (std::size_t j = i + 1; j < k; ++j) {
        if (bernoulli(rng, config.neg_inf_density)) continue;
        m(i, j) = Trop{uniform_int(rng, -spread * static_cast<std::int64_t>(k),
                                   spread * static_cast<std::int64_t>(k))};
      }
    }
    return m;
  };
  TropMatrix x = structured();
  TropMatrix y = structured();
  return {std::move(x), std::move(y)};
}

std::string TropSearchReport::verdict() const {
  if (witness) return "witness";
  return budget_exhausted ? "inconclusive" : "not-found";
}

TropSearchReport check_tropical(const IdentityWords& id, std::size_t k,
                                const TropSearchConfig& config, const RunLimits& limits) {
  validate_identity(id);
  if (k < 1) throw std::invalid_argument("check_tropical: dimension must be at least 1");
  if (config.entry_max < config.entry_min) throw std::invalid_argument("check_tropical: empty entry range");
  if (!(config.neg_inf_density >= 0.0 && config.neg_inf_density <= 1.0)) {
    throw std::invalid_argument("check_tropical: -inf density outside [0, 1]");
  }

  TropSearchReport report;
  report.identity = id;
  report.dim = k;
  report.config = config;

  // Evaluate the shared prefix and suffix once per sample; only the middle
  // parts differ between the two sides.
  std::size_t pre = 0;
  while (pre < id.lhs.size() && pre < id.rhs.size() && id.lhs[pre] == id.rhs[pre]) ++pre;
  std::size_t suf = 0;
  while (suf + pre < id.lhs.size() && suf + pre < id.rhs.size() &&
         id.lhs[id.lhs.size() - 1 - suf] == id.rhs[id.rhs.size() - 1 - suf]) {
    ++suf;
  }
  const std::string_view lhs(id.lhs), rhs(id.rhs);
  const auto prefix = lhs.substr(0, pre);
  const auto suffix = lhs.substr(lhs.size() - suf);
  const auto lhs_mid = lhs.substr(pre, lhs.size() - pre - suf);
  const auto rhs_mid = rhs.substr(pre, rhs.size() - pre - suf);

  const SampleRun run = run_samples(config.samples, limits, [&](std::uint64_t i) {
    const auto [x, y] = sample_ut_pair(k, config, i);
    const TropMatrix p = eval_or_identity(prefix, x, y);
    const TropMatrix s = eval_or_identity(suffix, x, y);
    const TropMatrix l = trop_mul(trop_mul(p, eval_or_identity(lhs_mid, x, y)), s);
    const TropMatrix r = trop_mul(trop_mul(p, eval_or_identity(rhs_mid, x, y)), s);
    return !(l == r);
  });
  report.samples_run = run.samples_run;
  report.budget_exhausted = run.budget_exhausted;
  if (run.hit) {
    auto [x, y] = sample_ut_pair(k, config, *run.hit);
    const TropMatrix l = eval_word(id.lhs, x, y);
    const TropMatrix r = eval_word(id.rhs, x, y);
    const auto diff = first_difference(l, r);
    if (!diff) throw std::logic_error("check_tropical: witness did not reproduce");
    TropWitness w{id, k, std::move(x), std::move(y), diff->first, diff->second,
                  l(diff->first, diff->second), r(diff->first, diff->second), *run.hit};
    if (!verify_witness(w)) throw std::logic_error("check_tropical: witness failed verification");
    report.witness = std::move(w);
  }
  return report;
}

RhoConsistencyReport check_rho_consistency(const IdentityWords& id, int n, std::uint64_t samples,
                                           int max_word_len, std::uint64_t seed) {
  validate_identity(id);
  if (n < 1 || n > 4) throw std::invalid_argument("check_rho_consistency: rank must be in [1, 4]");
  const PlacticRep rep(n);
  RhoConsistencyReport report;
  report.identity = id;
  report.rank = n;
  report.max_word_len = max_word_len;
  report.seed = seed;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const auto [x, y] = sample_word_pair(n, max_word_len, seed, i);
    const TropMatrix xm = rep.word(x), ym = rep.word(y);
    const bool matrices_equal = eval_word(id.lhs, xm, ym) == eval_word(id.rhs, xm, ym);
    const bool tableaux_equal = holds_at(id, x, y);
    ++report.samples_run;
    if (!matrices_equal) ++report.matrix_mismatches;
    if (matrices_equal != tableaux_equal) {
      ++report.verdict_disagreements;
      if (!report.first_disagreement) report.first_disagreement = std::pair{x, y};
    }
  }
  return report;
}

}  // namespace placid
