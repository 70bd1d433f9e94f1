#pragma once

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "verba/atlas/corpus.hpp"

namespace verba::atlas {

struct VerifyOptions {
  /// Check ids or scopes; empty runs everything.
  std::vector<std::string> only;
  /// Skips the checks marked heavy (order 3^6 group, delta_2 construction).
  bool budget_small = false;
  Budgets budgets;
  std::string cache_dir;
  std::uint64_t seed = 1;
};

class CheckContext;

struct CheckOutcome {
  bool passed = false;
  std::string detail;
};

struct Check {
  std::string id;
  /// Topic: breadth, interchange, dmax, hereditary, hdm or oracles.
  std::string scope;
  std::string title;
  double time_limit_s = 600;
  bool heavy = false;
  std::function<CheckOutcome(CheckContext&)> run;
};

[[nodiscard]] const std::vector<Check>& check_registry();
[[nodiscard]] const std::vector<std::string>& check_scopes();

struct CheckResult {
  std::string id, scope, title;
  bool passed = false;
  bool skipped = false;
  bool budget_abort = false;
  bool over_time = false;
  double seconds = 0;
  double time_limit_s = 0;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> results;
  [[nodiscard]] bool all_passed() const;
  [[nodiscard]] bool any_budget_abort() const;
};

/// Throws InvalidArgument for an `only` entry that names no check or scope.
[[nodiscard]] VerifyReport verify_paper(const VerifyOptions& opts,
                                        const std::function<void(const CheckResult&)>& on_result = {});

/// "PASS id (1.23 s, limit 5 s): detail"
[[nodiscard]] std::string format_line(const CheckResult& r);
void to_json(nlohmann::json& j, const CheckResult& r);

}  // namespace verba::atlas
