#ifndef ROOTSTRATA_VERIFY_HPP
#define ROOTSTRATA_VERIFY_HPP

#include <functional>
#include <string>
#include <vector>

#include "rootstrata/json_io.hpp"
#include "rootstrata/types.hpp"

namespace rootstrata {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  int max_rank = 8;  // at most 8
  bool deep = false; // enable the rank <= 4 brute-force group and rational LP oracles
  bool parallel = true;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  int passed = 0;
  int failed = 0;
  bool all_pass() const { return failed == 0; }
};

struct VerifyTask {
  std::string name;
  std::function<CheckResult()> fn;
};

/// Every irreducible type with rank <= max_rank, in a fixed order.
std::vector<RootSystemSpec> systems_up_to(int max_rank);

/// The full battery as independent tasks; deterministic order.
std::vector<VerifyTask> build_verify_tasks(const VerifyOptions& opt);

/// Serial reference runner.
VerifyReport run_tasks_serial(const std::vector<VerifyTask>& tasks);
/// OpenMP runner; identical results and ordering as the serial one.
VerifyReport run_tasks_parallel(const std::vector<VerifyTask>& tasks);

VerifyReport run_verify(const VerifyOptions& opt);

Json verify_report_json(const VerifyOptions& opt, const VerifyReport& rep);

}  // namespace rootstrata

#endif
