#pragma once

#include <string>
#include <vector>

#include "dihedra/divisor_lattice.hpp"

namespace dihedra {

struct SelftestOptions {
  std::string golden_dir;  // empty: the directory recorded at build time
  Int max_n = 8;
  Int max_generators = 4;  // 2 gamma + v in the oracle corpus
  int jobs = 1;
};

struct SelftestReport {
  bool passed = true;
  std::vector<std::string> lines;
};

std::string default_golden_dir();

/// Lines of `path` that differ from `actual`, named by line number and content.
std::vector<std::string> compare_golden(const std::string& path, const std::vector<std::string>& actual);

std::vector<std::string> complete_table_lines(Int n_min, Int n_max, int jobs = 1);
std::vector<std::string> kdec_table_lines(const std::vector<Int>& ns, Int k, Int genus_bound, int jobs = 1);

SelftestReport run_selftest(const SelftestOptions& opts);

}  // namespace dihedra
