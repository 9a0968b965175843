#pragma once

#include <optional>
#include <string>
#include <vector>

namespace subshift {

// One witnessable rule failure. `at` names the cell the rule fired on; `ref`
// names the other cell involved when the rule relates two locations.
struct Violation {
  std::string rule;
  std::string at;
  std::string detail;
  std::optional<std::string> ref;
};

struct ValidationReport {
  std::vector<Violation> violations;
  long long skipped = 0;  // checks whose references left the window
  bool ok() const { return violations.empty(); }
};

}  // namespace subshift
