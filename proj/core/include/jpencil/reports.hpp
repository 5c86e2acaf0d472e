#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace jpencil {

struct PencilViolation {
  std::string field;                 // "a", "gamma_seq", "alpha", ...
  std::optional<std::size_t> index;  // sequence position, if applicable
  std::string message;
};

struct ValidationReport {
  std::vector<PencilViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Outcome of one identity check. In exact scalar modes `passed` means exact
/// equality and `max_deviation` is 0 on success; in float mode `passed` means
/// max_deviation <= tolerance and `tolerance_rule` documents how the
/// tolerance was derived.
struct CheckReport {
  std::string name;
  bool exact_mode = false;
  bool passed = false;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  std::string tolerance_rule;
  std::size_t checks_run = 0;
  std::vector<std::string> failures;  // bounded list of per-index messages

  void record_failure(std::string msg) {
    if (failures.size() < 16) failures.push_back(std::move(msg));
  }
};

}  // namespace jpencil
