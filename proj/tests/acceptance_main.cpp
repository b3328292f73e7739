// Runs every acceptance criterion and prints one line per criterion.

#include <cstdlib>
#include <iostream>
#include <string>

#include "steiner/acceptance.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 1;
  std::string only;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--seed") seed = std::stoull(argv[i + 1]);
    if (flag == "--only") only = argv[i + 1];
  }
  int failed = 0;
  const auto results = steiner::run_acceptance(steiner::select_criteria(only), seed,
                                               [&](const steiner::CriterionResult& r) {
                                                 std::cout << steiner::format_criterion(r) << std::endl;
                                                 failed += r.pass ? 0 : 1;
                                               });
  std::cout << results.size() - failed << "/" << results.size() << " criteria passed" << std::endl;
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
