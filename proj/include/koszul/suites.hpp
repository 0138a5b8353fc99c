#pragma once

#include <optional>
#include <string>
#include <vector>

#include "koszul/io.hpp"

namespace koszul {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Named inputs used when a suite runs without --input
std::vector<std::pair<std::string, MatroidInput>> default_inputs(bool quick);

SuiteReport suite_reciprocity(const std::vector<std::pair<std::string, MatroidInput>>& inputs, int D);
SuiteReport suite_gb(const std::vector<std::pair<std::string, MatroidInput>>& inputs, int D);
SuiteReport suite_branching(int n_max, int i_max);
SuiteReport suite_exactness(int n_max);
SuiteReport suite_injectivity(int n_max, int D);
SuiteReport suite_closed_forms(int n_max, int i_max);
SuiteReport suite_pbw(int n_max, int i_max);
SuiteReport suite_oracle(int n_max);

const std::vector<std::string>& suite_names();  // excluding "all"
// Runs one named suite on its default grid; input overrides the default inputs where it applies
SuiteReport run_suite(const std::string& name, bool quick, std::optional<MatroidInput> input, int D);

}  // namespace koszul
