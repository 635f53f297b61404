#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qmm/count_kernel.hpp"
#include "qmm/polysys.hpp"
#include "qmm/report.hpp"

namespace qmm {

struct GroupCase {
  uint32_t p = 2;
  int n = 2;
  MatrixGroupKind kind = MatrixGroupKind::general_linear;
};

struct CountCase {
  int g = 2;
  int n = 2;
  uint32_t p = 2;
  int m = 0;
};

struct SuiteConfig {
  // bound checks
  std::vector<int> gs{2, 3};
  int n_max = 6;
  int top_budget = 12;

  // iteration consistency
  int iteration_exhaustive_n = 4;   // exhaustive at the smallest g
  int iteration_sample_count = 100; // random samples at the next g
  int iteration_sample_n = 5;
  uint64_t seed = 20240501;

  // counting
  std::vector<uint32_t> unit_primes{2, 3, 5};  // n = 1 exactness
  int unit_m_max = 2;
  std::vector<CountCase> count_cases{{1, 2, 2, 0}, {2, 2, 2, 0}, {2, 2, 2, 1}, {2, 2, 3, 0}};
  std::vector<CountCase> fixed_cases{{2, 2, 2, 1}, {2, 2, 2, 2}, {2, 2, 3, 1}, {2, 2, 3, 2}};
  std::vector<uint32_t> ratio_primes{2, 3, 5};  // diagnostics at g=2, n=2, m=0
  int mustata_m_max = 1;
  uint32_t mustata_prime = 2;
  BigInt budget = BigInt(1) << 26;
  double band_lo = 0.5;
  double band_hi = 2.0;

  // groups
  std::vector<GroupCase> groups{{2, 2, MatrixGroupKind::general_linear},
                                {3, 2, MatrixGroupKind::special_linear},
                                {3, 2, MatrixGroupKind::general_linear},
                                {5, 2, MatrixGroupKind::special_linear}};
  std::vector<int> group_gs{1, 2};
  uint64_t group_cap = 2000;

  // plumbing
  int workers = 0;
  std::string baselines_path = "baselines.txt";
  bool freeze = false;
  bool include_excluded_type = false;  // also feed (1,n) into the bound grid
};

// Throws std::invalid_argument on malformed config.
SuiteConfig suite_config_from_json(const Json& j);
Json suite_config_to_json(const SuiteConfig& cfg);

SuiteReport run_suite(const SuiteConfig& cfg);

}  // namespace qmm
