#ifndef TANSEC_VERIFY_HPP
#define TANSEC_VERIFY_HPP

#include "tansec/triangles.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace tansec {

enum class CheckStatus { Pass, Fail, Skipped };

std::string check_status_name(CheckStatus s);

struct CheckResult {
  std::string check;    // stable identifier, e.g. "triangle.A.oracle"
  std::string family;   // "" when not tied to one family
  int n = -1;           // -1 when not tied to a row
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

using ResultSink = std::function<void(const CheckResult&)>;

struct VerifyOptions {
  int max_n = 0;  // 0 = each check's documented default bound
  std::optional<FaultSpec> fault;
};

struct VerifyTotals {
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  bool ok() const { return failed == 0; }
};

// Suites: all, algebra, triangles, oracle, operator, series, analytic.
std::vector<std::string> suite_names();
bool is_suite_name(const std::string& name);

VerifyTotals run_suite(const std::string& suite, const VerifyOptions& opts, const ResultSink& sink);

}  // namespace tansec

#endif
