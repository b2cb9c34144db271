#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "halfspace/config.hpp"

namespace halfspace {

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;   ///< worst error observed
  double tolerance = 0.0;
  std::string detail;
};

struct ValidationOptions {
  std::optional<double> tolerance;  ///< replaces every check's own tolerance
  std::optional<std::string> only;  ///< run a single named check
};

/// identity, image, dcim, prony, edof, convergence.
const std::vector<std::string>& validation_check_names();

/// Throws ConfigError for an unknown `only` name.
std::vector<CheckResult> run_validation(const ScenarioConfig& config,
                                        const ValidationOptions& options = {});

/// One "PASS|FAIL name measured=... tol=... detail" line per check.
void write_validation_report(std::ostream& out, const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace halfspace
