#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ktheta/sweeps.hpp"

namespace ktheta {

struct VerifyOptions {
  std::uint64_t seed = 20100611;
  double cocycleTolerance = 1e-9;
  double holonomyTolerance = 1e-6;
  sweeps::Mode mode = sweeps::Mode::Parallel;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Criterion ids of a suite: lattice, theta, ah, sw, analytic, all.
/// Throws ValidationError for an unknown suite.
std::vector<int> suite_criteria(const std::string& suite);

/// Runs one numbered acceptance criterion (1..12). Exceptions inside the
/// check are reported as failures.
CriterionResult run_criterion(int id, const VerifyOptions& options);

std::vector<CriterionResult> run_suite(const std::string& suite, const VerifyOptions& options);

}  // namespace ktheta
