// placid: build identities, check them, and inspect representations.
//
// Exit codes: 0 verdict produced, 1 budget ran out with no verdict,
// 2 bad arguments or unreadable input, 3 a bench criterion failed.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "placid/identity_checker.hpp"
#include "placid/identity_forge.hpp"
#include "placid/json_io.hpp"
#include "placid/plactic_rep.hpp"
#include "placid/verify/criteria.hpp"
#include "placid/words.hpp"

namespace {

using placid::Json;

constexpr int kExitOk = 0;
constexpr int kExitInconclusive = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBenchFailed = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  std::string format = "text";
  std::string out_path;

  bool json() const { return format == "json"; }

  void add_to(CLI::App* cmd) {
    cmd->add_option("--format", format, "Output on stdout")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", out_path, "Also write the JSON artifact to this file");
  }

  void emit(const Json& j, const std::string& text) const {
    std::cout << (json() ? j.dump(2) + "\n" : text);
    if (!out_path.empty()) {
      std::ofstream f(out_path);
      if (!f) throw UsageError("cannot write '" + out_path + "'");
      f << j.dump(2) << '\n';
    }
  }
};

// --seed, else $PLACID_SEED, else 0.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("PLACID_SEED"); env && *env) {
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
      v = std::stoull(env, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != std::string(env).size()) throw UsageError(std::string("bad PLACID_SEED '") + env + "'");
    return v;
  }
  return 0;
}

placid::IdentityWords read_identity(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open identity file '" + path + "'");
  try {
    return Json::parse(in).get<placid::IdentityWords>();
  } catch (const Json::exception& e) {
    throw UsageError("identity file '" + path + "': " + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError("identity file '" + path + "': " + e.what());
  }
}

std::string rows_text(const placid::Tableau& t) { return Json(t.rows()).dump(); }

// identity build

struct BuildArgs {
  int n = 0;
  bool constrained = false;
  std::string mode = "minimal";
  Output out;
};

int run_build(const BuildArgs& a) {
  if (a.n < 2) throw UsageError("-n must be at least 2");
  const auto b = placid::build_identity(a.n, a.constrained, placid::parse_qmode(a.mode));
  std::ostringstream os;
  os << "rank: " << b.rank << "\nmode: " << a.mode << (b.constrained ? " (constrained)" : "")
     << "\nq: " << b.q << " (|q| = " << b.q.size() << ")\nh: " << b.h << "\npre_lhs: " << b.pre_lhs
     << "\npre_rhs: " << b.pre_rhs << "\nlhs: " << b.identity.lhs << "\nrhs: " << b.identity.rhs
     << "\nlength: " << b.length() << '\n';
  a.out.emit(Json(b), os.str());
  return kExitOk;
}

// identity check-plactic

struct PlacticArgs {
  int n = 0;
  std::string identity_file;
  std::uint64_t samples = 10000;
  int max_word_len = 8;
  std::optional<std::uint64_t> seed;
  bool exhaustive = false;
  double budget = placid::kDefaultBudgetSeconds;
  unsigned threads = 0;
  Output out;
};

int run_check_plactic(const PlacticArgs& a) {
  const auto id = read_identity(a.identity_file);
  const std::uint64_t seed = resolve_seed(a.seed);
  const auto strategy = a.exhaustive ? placid::PlacticStrategy::exhaustive(a.max_word_len)
                                     : placid::PlacticStrategy::random(a.samples, a.max_word_len, seed);
  const auto r = placid::check_plactic(id, a.n, strategy, {a.budget, a.threads});
  std::ostringstream os;
  os << "verdict: " << r.verdict() << "\nrank: " << r.rank << "\nstrategy: "
     << (a.exhaustive ? "exhaustive" : "random") << " (max word length " << a.max_word_len
     << ")\nseed: " << seed << "\nsamples_run: " << r.samples_run
     << "\nbudget_exhausted: " << (r.budget_exhausted ? "true" : "false") << '\n';
  if (r.counterexample) {
    os << "counterexample at sample " << r.counterexample->sample_index << ":\n  x = "
       << placid::format_word(r.counterexample->x) << "\n  y = "
       << placid::format_word(r.counterexample->y) << '\n';
  }
  a.out.emit(Json(r), os.str());
  return r.verdict() == "inconclusive" ? kExitInconclusive : kExitOk;
}

// identity check-ut

struct TropArgs {
  std::size_t k = 0;
  std::string identity_file;
  placid::TropSearchConfig config;
  std::optional<std::uint64_t> seed;
  double budget = placid::kDefaultBudgetSeconds;
  unsigned threads = 0;
  Output out;
};

int run_check_ut(TropArgs a) {
  const auto id = read_identity(a.identity_file);
  a.config.seed = resolve_seed(a.seed);
  const auto r = placid::check_tropical(id, a.k, a.config, {a.budget, a.threads});
  std::ostringstream os;
  os << "verdict: " << r.verdict() << "\ndim: " << r.dim << "\nentries: [" << a.config.entry_min
     << ", " << a.config.entry_max << "], -inf density " << a.config.neg_inf_density
     << "\nseed: " << a.config.seed << "\nsamples_run: " << r.samples_run
     << "\nbudget_exhausted: " << (r.budget_exhausted ? "true" : "false") << '\n';
  if (r.witness) {
    const auto& w = *r.witness;
    os << "witness at sample " << w.sample_index << ", entry (" << w.row << "," << w.col
       << "): lhs " << placid::format_trop(w.lhs_value) << ", rhs "
       << placid::format_trop(w.rhs_value) << "\nX =\n"
       << placid::render(w.x) << "Y =\n"
       << placid::render(w.y);
  }
  a.out.emit(Json(r), os.str());
  return r.verdict() == "inconclusive" ? kExitInconclusive : kExitOk;
}

// rho

struct RhoArgs {
  int rank = 0;
  std::string word;
  Output out;
};

int run_rho(const RhoArgs& a) {
  const auto w = placid::parse_word(a.word);
  const auto m = placid::rho_word(a.rank, w);
  Json j{{"rank", a.rank}, {"word", placid::format_word(w)}, {"matrix", m}};
  a.out.emit(j, placid::render(m));
  return kExitOk;
}

// tableau

struct TableauArgs {
  std::string word;
  Output out;
};

int run_tableau(const TableauArgs& a) {
  const auto w = placid::parse_word(a.word);
  const auto t = placid::tableau_of_word(w);
  Json j{{"word", placid::format_word(w)}, {"tableau", t}};
  a.out.emit(j, placid::render(t) + "rows: " + rows_text(t) + "\n");
  return kExitOk;
}

// bench

struct BenchArgs {
  std::string suite = "all";
  std::optional<int> n;
  std::optional<std::uint64_t> seed;
  std::string fixture;
  Output out;
};

int run_bench(const BenchArgs& a) {
  placid::acceptance::SuiteOptions options;
  options.seed = resolve_seed(a.seed);
  options.fixture_path = a.fixture;
  options.rank = a.n;
  if (a.n && (*a.n < 2 || *a.n > 6)) throw UsageError("-n must lie in [2, 6]");
  const auto ids = placid::acceptance::suite_criteria(a.suite);
  Json results = Json::array();
  bool all = true;
  for (int id : ids) {
    const auto r = placid::acceptance::run_criterion(id, options);
    all = all && r.passed();
    if (!a.out.json()) std::cout << placid::acceptance::format_result(r) << std::endl;
    results.push_back({{"id", r.id},
                       {"name", r.name},
                       {"passed", r.passed()},
                       {"seconds", r.seconds},
                       {"limit_seconds", r.limit_seconds},
                       {"detail", r.detail}});
  }
  Json j{{"suite", a.suite}, {"seed", options.seed}, {"passed", all}, {"results", results}};
  if (a.n) j["n"] = *a.n;
  std::ostringstream os;
  os << "seed: " << options.seed << "\n" << (all ? "all passed" : "FAILED") << '\n';
  a.out.emit(j, os.str());
  return all ? kExitOk : kExitBenchFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"placid: plactic identities, tropical representations and checks"};
  app.require_subcommand(1);

  auto* identity = app.add_subcommand("identity", "Build and check identities");
  identity->require_subcommand(1);

  BuildArgs build;
  auto* build_cmd = identity->add_subcommand("build", "Build the identity for rank n");
  build_cmd->add_option("-n", build.n, "Rank (>= 2)")->required();
  build_cmd->add_flag("--constrained", build.constrained, "Use the constrained q-word");
  build_cmd->add_option("--mode", build.mode, "q-word construction")
      ->check(CLI::IsMember({"minimal", "any"}));
  build.out.add_to(build_cmd);

  PlacticArgs plactic;
  auto* plactic_cmd = identity->add_subcommand("check-plactic", "Check an identity in the plactic monoid");
  plactic_cmd->add_option("-n", plactic.n, "Rank")->required();
  plactic_cmd->add_option("--identity-file", plactic.identity_file, "Identity JSON")->required();
  plactic_cmd->add_option("--samples", plactic.samples, "Random substitution pairs");
  plactic_cmd->add_option("--max-word-len", plactic.max_word_len, "Longest substituted word");
  plactic_cmd->add_option("--seed", plactic.seed, "Seed (default $PLACID_SEED, else 0)");
  plactic_cmd->add_flag("--exhaustive", plactic.exhaustive, "Try every pair up to --max-word-len");
  plactic_cmd->add_option("--budget", plactic.budget, "Wall-clock budget in seconds");
  plactic_cmd->add_option("--threads", plactic.threads, "Workers (0 = one per core)");
  plactic.out.add_to(plactic_cmd);

  TropArgs trop;
  auto* trop_cmd = identity->add_subcommand("check-ut", "Search for a k x k upper triangular witness");
  trop_cmd->add_option("-k", trop.k, "Matrix dimension")->required();
  trop_cmd->add_option("--identity-file", trop.identity_file, "Identity JSON")->required();
  trop_cmd->add_option("--samples", trop.config.samples, "Random matrix pairs");
  trop_cmd->add_option("--seed", trop.seed, "Seed (default $PLACID_SEED, else 0)");
  trop_cmd->add_option("--min", trop.config.entry_min, "Smallest finite entry");
  trop_cmd->add_option("--max", trop.config.entry_max, "Largest finite entry");
  trop_cmd->add_option("--neg-inf-density", trop.config.neg_inf_density, "Chance of -inf above the diagonal")
      ->check(CLI::Range(0.0, 1.0));
  trop_cmd->add_option("--budget", trop.budget, "Wall-clock budget in seconds");
  trop_cmd->add_option("--threads", trop.threads, "Workers (0 = one per core)");
  trop.out.add_to(trop_cmd);

  RhoArgs rho;
  auto* rho_cmd = app.add_subcommand("rho", "Tropical matrix of a word");
  rho_cmd->add_option("--rank", rho.rank, "Rank")->required();
  rho_cmd->add_option("--word", rho.word, "Word, e.g. \"1 3 1 4\"")->required();
  rho.out.add_to(rho_cmd);

  TableauArgs tab;
  auto* tab_cmd = app.add_subcommand("tableau", "Insertion tableau of a word");
  tab_cmd->add_option("--word", tab.word, "Word, e.g. \"1 3 1 4\"")->required();
  tab.out.add_to(tab_cmd);

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run acceptance suites with timings");
  bench_cmd->add_option("--suite", bench.suite, "identity|tableau|rho|lattice|paths|separation|all")
      ->check(CLI::IsMember({"identity", "tableau", "rho", "lattice", "paths", "separation", "all"}));
  bench_cmd->add_option("-n", bench.n, "Largest rank for the scalable checks");
  bench_cmd->add_option("--seed", bench.seed, "Seed (default $PLACID_SEED, else 0)");
  bench_cmd->add_option("--fixture", bench.fixture, "Frozen UT3 witness to re-verify");
  bench.out.add_to(bench_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (build_cmd->parsed()) return run_build(build);
    if (plactic_cmd->parsed()) return run_check_plactic(plactic);
    if (trop_cmd->parsed()) return run_check_ut(trop);
    if (rho_cmd->parsed()) return run_rho(rho);
    if (tab_cmd->parsed()) return run_tableau(tab);
    if (bench_cmd->parsed()) return run_bench(bench);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
