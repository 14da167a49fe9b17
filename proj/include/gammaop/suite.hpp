#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gammaop/operator_pair.hpp"
#include "gammaop/types.hpp"

// Seeded property suite. Every criterion draws from its own generator, seeded
// from the run seed and the criterion id, so criteria can run in isolation.
namespace gammaop {

struct SuiteOptions {
  std::uint64_t seed = 20240601;
  Tolerance tol;
  Index boundary_grid = 64;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int id = 0;
  std::string name;
  std::function<CriterionResult(const SuiteOptions&)> run;
};

const std::vector<Criterion>& suite_criteria();

/// Runs every criterion in order. Exceptions thrown by a criterion are
/// reported as a failure of that criterion.
std::vector<CriterionResult> run_suite(const SuiteOptions& opts);

/// Runs one criterion with the same exception handling as run_suite.
CriterionResult run_criterion(const Criterion& c, const SuiteOptions& opts);

/// The generated Gamma-contractions shared by several criteria.
std::vector<OperatorPair> generated_contractions(std::uint64_t seed, Index count);

}  // namespace gammaop
