// Runs every acceptance criterion and prints one line per criterion.
// Exit status is 0 only if all of them pass within their time limits.

#include <iostream>
#include <numeric>
#include <vector>

#include "CLI11.hpp"
#include "placid/verify/criteria.hpp"

int main(int argc, char** argv) {
  CLI::App app{"placid acceptance suite"};
  placid::acceptance::SuiteOptions options;
  std::vector<int> only;
  app.add_option("--seed", options.seed, "Seed for every sampled criterion");
  app.add_option("--fixture", options.fixture_path, "Frozen UT3 witness");
  app.add_option("--only", only, "Run just these criteria")->check(CLI::Range(1, 12));
  CLI11_PARSE(app, argc, argv);

  if (only.empty()) {
    only.resize(placid::acceptance::kCriterionCount);
    std::iota(only.begin(), only.end(), 1);
  }
  std::cout << "seed " << options.seed << '\n';
  int failed = 0;
  for (int id : only) {
    const auto r = placid::acceptance::run_criterion(id, options);
    if (!r.passed()) ++failed;
    std::cout << placid::acceptance::format_result(r) << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
