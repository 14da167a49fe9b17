// Runs the acceptance criteria and prints one line per criterion.
//
//   acceptance [--seed N] [--only ID]...

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <set>
#include <string>

#include "gammaop/suite.hpp"

int main(int argc, char** argv) {
  gammaop::SuiteOptions opts;
  std::set<int> only;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--seed") {
      opts.seed = std::stoull(argv[i + 1]);
    } else if (flag == "--only") {
      only.insert(std::stoi(argv[i + 1]));
    } else {
      std::cerr << "unknown flag " << flag << "\n";
      return 2;
    }
  }

  int failures = 0;
  for (const auto& c : gammaop::suite_criteria()) {
    if (!only.empty() && !only.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    const auto r = gammaop::run_criterion(c, opts);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << ": " << r.detail << " ("
              << std::fixed << secs << std::defaultfloat << " s)" << std::endl;
    if (!r.passed) ++failures;
  }
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
