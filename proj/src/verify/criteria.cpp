#include "placid/verify/criteria.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

#include "placid/identity_checker.hpp"
#include "placid/identity_forge.hpp"
#include "placid/json_io.hpp"
#include "placid/path_semantics.hpp"
#include "placid/plactic_rep.hpp"
#include "placid/rng.hpp"
#include "placid/subset_lattice.hpp"
#include "placid/verify/oracles.hpp"
#include "placid/words.hpp"

namespace placid::acceptance {

namespace {

// What a check returns before timing is attached.
struct Outcome {
  bool ok = false;
  std::string detail;
};

std::string cat(const auto&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

Subset random_subset_of_size(Rng& rng, int n, int k) {
  Subset s;
  while (s.size() < k) s = s.with(static_cast<int>(uniform_int(rng, 1, n)));
  return s;
}

// Random S <= T with |S| = |T| (S may equal T unless `strict`).
std::pair<Subset, Subset> random_comparable_pair(Rng& rng, int n, bool strict) {
  while (true) {
    const int k = static_cast<int>(uniform_int(rng, 1, n - 1));
    Subset s = random_subset_of_size(rng, n, k);
    Subset t = random_subset_of_size(rng, n, k);
    if (subset_leq(t, s)) std::swap(s, t);
    if (subset_leq(s, t) && !(strict && s == t)) return {s, t};
  }
}

Word random_word(Rng& rng, int n, int min_len, int max_len) {
  Word w(static_cast<std::size_t>(uniform_int(rng, min_len, max_len)));
  for (auto& x : w) x = static_cast<Letter>(uniform_int(rng, 1, n));
  return w;
}

template <class T>
const T& pick(Rng& rng, const std::vector<T>& xs) {
  return xs[uniform_below(rng, xs.size())];
}

Outcome identity_length() {
  const BuiltIdentity b = build_identity(6, false, QMode::Minimal);
  return {b.length() == 1298, cat("n=6 unconstrained minimal: |q|=", b.q.size(), " h=", b.h,
                                  " length=", b.length(), " (expected 1298)")};
}

Outcome tableau_examples() {
  const Tableau expected({{1, 1, 4}, {3}});
  std::string bad;
  for (const char* text : {"1 3 1 4", "1 3 4 1", "3 1 1 4"}) {
    const Tableau t = tableau_of_word(parse_word(text));
    if (t != expected) bad += cat(" [", text, "] gave ", render(t));
  }
  if (!bad.empty()) return {false, "mismatch:" + bad};
  return {true, "1314, 1341, 3114 all give rows [[1,1,4],[3]]"};
}

Outcome knuth_invariance(int max_rank) {
  std::size_t instances = 0;
  for (int n = 2; n <= max_rank; ++n) {
    const PlacticRep rep(n);
    for (Letter a = 1; a <= n; ++a) {
      for (Letter b = 1; b <= n; ++b) {
        for (Letter c = 1; c <= n; ++c) {
          std::vector<std::pair<Word, Word>> sides;
          if (a < b && b <= c) sides.push_back({{b, c, a}, {b, a, c}});
          if (a <= b && b < c) sides.push_back({{c, a, b}, {a, c, b}});
          for (const auto& [l, r] : sides) {
            ++instances;
            if (rep.word(l) != rep.word(r)) {
              return {false, cat("n=", n, ": rho(", format_word(l), ") != rho(", format_word(r), ")")};
            }
          }
        }
      }
    }
  }
  return {true, cat(instances, " relation instances over n=2..", max_rank, ", all equal")};
}

Outcome faithfulness() {
  const FaithfulnessReport r = faithfulness_check(3, 5);
  if (!r.exhaustive) return {false, "faithfulness check fell back to sampling"};
  std::string detail = cat("n=3, words to length 5: ", r.words_checked, " words, ", r.classes,
                           " classes, ", r.violations.size(), " violations");
  if (!r.ok()) {
    detail += cat("; first: ", format_word(r.violations[0].first), " vs ",
                  format_word(r.violations[0].second));
  }
  return {r.ok(), detail};
}

std::vector<std::pair<Subset, Subset>> comparable_pairs(int n) {
  std::vector<std::pair<Subset, Subset>> out;
  const auto sets = canonical_subsets(n);
  for (Subset s : sets) {
    for (Subset t : sets) {
      if (s.size() == t.size() && subset_leq(s, t)) out.emplace_back(s, t);
    }
  }
  return out;
}

// Checks rho entry, readability DP and the subword oracle agree on one case.
std::string readability_mismatch(const PlacticRep& rep, const TropMatrix& m, const Word& w,
                                 Subset s, Subset t, int n) {
  const Trop entry = m(rep.index_of(s), rep.index_of(t));
  const std::int64_t dp = max_readable_length(w, s, t);
  const std::int64_t brute = oracle::readable_length(w, s, t, n);
  if (entry == Trop{dp} && dp == brute) return {};
  return cat("w=[", format_word(w), "] S=", format_subset(s), " T=", format_subset(t), ": rho=",
             format_trop(entry), " dp=", dp, " brute=", brute);
}

Outcome readability(std::uint64_t seed) {
  std::size_t exhaustive = 0;
  for (int n = 1; n <= 3; ++n) {
    const PlacticRep rep(n);
    const auto pairs = comparable_pairs(n);
    for (int len = 0; len <= 6; ++len) {
      for (const Word& w : all_words(n, len)) {
        const TropMatrix m = rep.word(w);
        for (const auto& [s, t] : pairs) {
          ++exhaustive;
          if (auto bad = readability_mismatch(rep, m, w, s, t, n); !bad.empty()) return {false, bad};
        }
      }
    }
  }
  constexpr int kRank = 4;
  constexpr std::uint64_t kSamples = 2000;
  const PlacticRep rep(kRank);
  const auto pairs = comparable_pairs(kRank);
  for (std::uint64_t i = 0; i < kSamples; ++i) {
    Rng rng = stream_rng(seed, i);
    const Word w = random_word(rng, kRank, 0, 8);
    const auto& [s, t] = pick(rng, pairs);
    if (auto bad = readability_mismatch(rep, rep.word(w), w, s, t, kRank); !bad.empty()) {
      return {false, bad};
    }
  }
  return {true, cat(exhaustive, " exhaustive cases (n<=3, |w|<=6), ", kSamples,
                    " sampled cases (n=4, |w|<=8)")};
}

Outcome lattice_oracle(int max_rank) {
  std::size_t pairs = 0;
  for (int n = 1; n <= max_rank; ++n) {
    std::vector<Subset> sets;
    for (Subset::Mask m = 0; m < (Subset::Mask{1} << n); ++m) sets.emplace_back(m);
    for (Subset s : sets) {
      if (meet(s, s) != s || join(s, s) != s) return {false, cat("idempotence fails at ", format_subset(s))};
      for (Subset t : sets) {
        ++pairs;
        const Subset m = meet(s, t);
        const Subset j = join(s, t);
        const auto where = cat(" for ", format_subset(s), ", ", format_subset(t), " (n=", n, ")");
        if (m != oracle::glb(s, t, n)) return {false, "meet differs from glb" + where};
        if (j != oracle::lub(s, t, n)) return {false, "join differs from lub" + where};
        if (m != meet(t, s) || j != join(t, s)) return {false, "commutativity fails" + where};
        if (meet(s, join(s, t)) != s || join(s, meet(s, t)) != s) return {false, "absorption fails" + where};
        if (subset_leq(s, t) != (m == s) || subset_leq(s, t) != (j == t)) {
          return {false, "order disagrees with meet/join" + where};
        }
      }
    }
    if (n <= 4) {
      for (Subset a : sets) {
        for (Subset b : sets) {
          for (Subset c : sets) {
            if (meet(meet(a, b), c) != meet(a, meet(b, c)) || join(join(a, b), c) != join(a, join(b, c))) {
              return {false, cat("associativity fails for ", format_subset(a), ", ", format_subset(b),
                                 ", ", format_subset(c))};
            }
          }
        }
      }
    }
  }
  return {true, cat(pairs, " pairs over n=1..", max_rank,
                    " match brute glb/lub; idempotence, commutativity, absorption, order; "
                    "associativity exhaustive for n<=",
                    std::min(max_rank, 4))};
}

Outcome chain_bound(int max_rank) {
  std::string detail;
  for (int n = 2; n <= max_rank; ++n) {
    int best = 0;
    for (const auto& [s, t] : comparable_pairs(n)) {
      const int c = chain_length(s, t);
      if (c != oracle::longest_chain(s, t, n)) {
        return {false, cat("chain_length differs from brute chain for ", format_subset(s), ", ",
                           format_subset(t))};
      }
      best = std::max(best, c);
    }
    const int expected = n * n / 4 + 1;
    detail += cat(detail.empty() ? "" : ", ", "n=", n, ": ", best);
    if (best != expected) return {false, cat(detail, " (expected ", expected, ")")};
  }
  return {true, "max chain length = floor(n^2/4)+1: " + detail};
}

Outcome split_postconditions(std::uint64_t seed, int max_rank) {
  constexpr std::uint64_t kInstances = 10000;
  std::uint64_t increasing = 0;
  std::uint64_t decreasing = 0;
  std::uint64_t long_chains = 0;
  for (std::uint64_t i = 0; i < kInstances; ++i) {
    Rng rng = stream_rng(seed, i);
    const int n = static_cast<int>(uniform_int(rng, 2, max_rank));
    std::vector<std::int64_t> counts(static_cast<std::size_t>(n));
    for (auto& c : counts) c = uniform_int(rng, 0, 6);
    const WordCounts w = WordCounts::from_counts(counts);
    const auto [s, t] = random_comparable_pair(rng, n, true);
    if (chain_length(s, t) > n) ++long_chains;

    if (auto bad = oracle::split_violation(w, s, t, split(w, s, t)); !bad.empty()) {
      return {false, "split: " + bad};
    }
    if (w.count_of_set(s) <= w.count_of_set(t)) {
      ++increasing;
      if (auto bad = oracle::split_increasing_violation(w, s, t, split_apply_increasing(w, s, t));
          !bad.empty()) {
        return {false, "increasing: " + bad};
      }
    }
    if (w.count_of_set(t) <= w.count_of_set(s)) {
      ++decreasing;
      if (auto bad = oracle::split_decreasing_violation(w, s, t, split_apply_decreasing(w, s, t));
          !bad.empty()) {
        return {false, "decreasing: " + bad};
      }
    }
  }
  return {true, cat(kInstances, " instances at n<=", max_rank, " (", long_chains,
                    " with chain length > n); ", increasing, " increasing and ", decreasing,
                    " decreasing applications; zero violations")};
}

// Uniform walk S = v_0 <= v_1 <= ... <= v_len = T through [S,T].
Path random_path(Rng& rng, const LabeledDigraph& g, std::string_view labels, Subset s, Subset t,
                 int n) {
  std::vector<std::size_t> verts{g.vertex_of(s)};
  Subset cur = s;
  for (std::size_t k = 0; k + 1 < labels.size(); ++k) {
    cur = pick(rng, enumerate_interval(cur, t, n));
    verts.push_back(g.vertex_of(cur));
  }
  verts.push_back(g.vertex_of(t));
  return make_path(g, verts, labels);
}

Outcome splitting_inequality(std::uint64_t seed, int max_rank) {
  constexpr std::uint64_t kInstances = 2000;
  std::uint64_t from_max = 0;
  std::uint64_t tight = 0;
  for (std::uint64_t i = 0; i < kInstances; ++i) {
    Rng rng = stream_rng(seed, i);
    const int n = static_cast<int>(uniform_int(rng, 2, max_rank));
    const PlacticRep rep(n);
    const LabeledDigraph g = build_digraph(rep.word(random_word(rng, n, 1, 5)),
                                           rep.word(random_word(rng, n, 1, 5)));
    const auto [s, t] = random_comparable_pair(rng, n, false);
    std::string labels(static_cast<std::size_t>(uniform_int(rng, 1, 6)), 'X');
    for (char& c : labels) c = bernoulli(rng, 0.5) ? 'X' : 'Y';

    std::optional<Path> gamma;
    if (bernoulli(rng, 0.5)) {
      gamma = max_weight_path(g, labels, g.vertex_of(s), g.vertex_of(t)).witness;
      ++from_max;
    } else {
      gamma = random_path(rng, g, labels, s, t, n);
    }
    if (!gamma) return {false, cat("no labelled path from ", format_subset(s), " to ", format_subset(t))};
    const Subset mid = pick(rng, enumerate_interval(s, t, n));
    const SplitPaths sp = splitting_paths(g, *gamma, s, t, mid);

    const auto where = cat(" (instance ", i, ", n=", n, ", S=", format_subset(s), ", T=",
                           format_subset(t), ", N=", format_subset(mid), ", labels ", labels, ")");
    const std::size_t vn = g.vertex_of(mid);
    if (sp.sigma.start() != g.vertex_of(s) || sp.sigma.end() != vn || sp.tau.start() != vn ||
        sp.tau.end() != g.vertex_of(t) || sp.lambda.start() != vn || sp.lambda.end() != vn) {
      return {false, "split paths have wrong endpoints" + where};
    }
    if (sp.sigma.labels() != labels || sp.tau.labels() != labels || sp.lambda.labels() != labels) {
      return {false, "split paths do not carry gamma's labels" + where};
    }
    const std::int64_t lhs = path_weight(*gamma).value() + path_weight(sp.lambda).value();
    const std::int64_t rhs = path_weight(sp.sigma).value() + path_weight(sp.tau).value();
    if (lhs != sp.lhs || rhs != sp.rhs) return {false, "reported weights disagree with edges" + where};
    if (lhs > rhs) return {false, cat("w(gamma)+w(lambda)=", lhs, " > w(sigma)+w(tau)=", rhs, where)};
    if (lhs == rhs) ++tight;
  }
  return {true, cat(kInstances, " instances at n<=", max_rank, " (", from_max,
                    " heaviest paths, ", kInstances - from_max, " random walks; ", tight,
                    " tight); zero violations")};
}

Outcome identity_statistical(std::uint64_t seed) {
  std::string detail;
  bool ok = true;
  for (int n : {3, 4}) {
    for (bool constrained : {false, true}) {
      const BuiltIdentity b = build_identity(n, constrained);
      const auto r = check_plactic(b.identity, n, PlacticStrategy::random(10000, 8, seed),
                                   RunLimits{.budget_seconds = 120});
      ok = ok && r.verdict() == "pass";
      detail += cat(detail.empty() ? "" : "; ", "n=", n, constrained ? " constrained" : "",
                    " (length ", b.length(), "): ", r.verdict(), " after ", r.samples_run);
      if (r.counterexample) {
        detail += cat(" x=[", format_word(r.counterexample->x), "] y=[",
                      format_word(r.counterexample->y), "]");
      }
    }
  }
  return {ok, detail};
}

Outcome separation(std::uint64_t seed, const std::string& fixture_path) {
  const TropSearchConfig config{.samples = 100000, .seed = seed};
  const RunLimits limits{.budget_seconds = 50};
  const IdentityWords rank2 = build_identity(2, true).identity;
  const TropSearchReport r = check_tropical(rank2, 3, config, limits);
  if (!r.witness || !verify_witness(*r.witness)) {
    return {false, cat("n=2, k=3: ", r.verdict(), " after ", r.samples_run, " samples")};
  }
  std::string detail = cat("n=2, k=3: witness at sample ", r.witness->sample_index, " entry (",
                           r.witness->row, ",", r.witness->col, ") ",
                           format_trop(r.witness->lhs_value), " vs ",
                           format_trop(r.witness->rhs_value));

  if (!fixture_path.empty()) {
    std::ifstream in(fixture_path);
    if (!in) return {false, detail + "; cannot open fixture " + fixture_path};
    const auto frozen = Json::parse(in).get<TropWitness>();
    if (frozen.identity != rank2) return {false, detail + "; fixture identity differs from the built one"};
    if (!verify_witness(frozen)) return {false, detail + "; frozen witness no longer separates"};
    detail += "; frozen fixture re-verified";
  }

  const IdentityWords rank3 = build_identity(3, true).identity;
  const TropSearchReport r3 = check_tropical(rank3, 4, config, limits);
  if (r3.witness && verify_witness(*r3.witness)) {
    detail += cat("; n=3, k=4: witness at sample ", r3.witness->sample_index);
  } else {
    detail += cat("; n=3, k=4: ", r3.verdict(), " after ", r3.samples_run,
                  " samples (stall, informational)");
  }
  return {true, detail};
}

Outcome rank_separation(std::uint64_t seed) {
  const IdentityWords id = build_identity(2, true).identity;
  const auto at2 = check_plactic(id, 2, PlacticStrategy::exhaustive(5));
  if (at2.verdict() != "pass") return {false, "rank-2 identity fails at rank 2: " + at2.verdict()};
  const auto at3 = check_plactic(id, 3, PlacticStrategy::random(100000, 8, seed), RunLimits{.budget_seconds = 240});
  if (!at3.counterexample) {
    return {false, cat("rank 3: ", at3.verdict(), " after ", at3.samples_run, " samples")};
  }
  const auto& ce = *at3.counterexample;
  const Word lhs = substitute(id.lhs, ce.x, ce.y);
  const Word rhs = substitute(id.rhs, ce.x, ce.y);
  if (plactic_equal(lhs, rhs) || rho_word(3, lhs) == rho_word(3, rhs)) {
    return {false, "counterexample does not separate under tableaux and rho_3"};
  }
  return {true, cat("holds at rank 2 (exhaustive, words <= 5, ", at2.samples_run,
                    " pairs); rank 3 counterexample at sample ", ce.sample_index, ": x=[",
                    format_word(ce.x), "] y=[", format_word(ce.y), "]")};
}

struct CriterionInfo {
  const char* name;
  double limit_seconds;
};

const std::map<int, CriterionInfo>& criterion_table() {
  static const std::map<int, CriterionInfo> table{
      {1, {"identity length", 1}},
      {2, {"tableau examples", 1}},
      {3, {"Knuth invariance under rho", 30}},
      {4, {"faithfulness n=3", 120}},
      {5, {"readability semantics", 120}},
      {6, {"lattice oracle equivalence", 60}},
      {7, {"chain-length bound", 60}},
      {8, {"split postconditions", 120}},
      {9, {"splitting-paths inequality", 120}},
      {10, {"identities hold in plactic monoid", 300}},
      {11, {"UT separation witness", 120}},
      {12, {"rank separation", 300}},
  };
  return table;
}

}  // namespace

CriterionResult run_criterion(int id, const SuiteOptions& options) {
  const auto it = criterion_table().find(id);
  if (it == criterion_table().end()) throw std::invalid_argument(cat("unknown criterion ", id));
  CriterionResult out;
  out.id = id;
  out.name = it->second.name;
  out.limit_seconds = it->second.limit_seconds;
  const auto rank_or = [&](int fallback) { return options.rank.value_or(fallback); };

  const std::map<int, std::function<Outcome()>> checks{
      {1, [] { return identity_length(); }},
      {2, [] { return tableau_examples(); }},
      {3, [&] { return knuth_invariance(rank_or(4)); }},
      {4, [] { return faithfulness(); }},
      {5, [&] { return readability(options.seed); }},
      {6, [&] { return lattice_oracle(rank_or(5)); }},
      {7, [&] { return chain_bound(rank_or(5)); }},
      {8, [&] { return split_postconditions(options.seed, rank_or(6)); }},
      {9, [&] { return splitting_inequality(options.seed, rank_or(4)); }},
      {10, [&] { return identity_statistical(options.seed); }},
      {11, [&] { return separation(options.seed, options.fixture_path); }},
      {12, [&] { return rank_separation(options.seed); }},
  };

  const auto start = std::chrono::steady_clock::now();
  try {
    const Outcome o = checks.at(id)();
    out.check_ok = o.ok;
    out.detail = o.detail;
  } catch (const std::exception& e) {
    out.check_ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::vector<int> suite_criteria(const std::string& suite) {
  static const std::map<std::string, std::vector<int>> groups{
      {"identity", {1, 10}},  {"tableau", {2}},     {"rho", {3, 4, 5}},
      {"lattice", {6, 7, 8}}, {"paths", {9}},       {"separation", {11, 12}},
      {"all", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}},
  };
  const auto it = groups.find(suite);
  if (it == groups.end()) throw std::invalid_argument("unknown suite '" + suite + "'");
  return it->second;
}

std::vector<CriterionResult> run_suite(std::span<const int> ids, const SuiteOptions& options) {
  std::vector<CriterionResult> out;
  for (int id : ids) out.push_back(run_criterion(id, options));
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed() ? "[PASS] " : "[FAIL] ") << std::setw(2) << std::setfill('0') << r.id << ' '
     << r.name << " (" << std::fixed << std::setprecision(2) << r.seconds << "s / "
     << std::setprecision(0) << r.limit_seconds << "s)";
  if (r.check_ok && !r.passed()) os << " over time limit";
  os << ": " << r.detail;
  return os.str();
}

}  // namespace placid::acceptance
