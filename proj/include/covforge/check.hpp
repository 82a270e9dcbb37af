// Structured results shared by the symbolic, property and numeric checks.
#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace covforge {

enum class Status { pass, fail, skipped };
std::string_view status_name(Status s);

/// A wall-time bound asserted by a check; rendered with or without the
/// measured value so reports stay reproducible.
struct TimeLimit {
  std::string what;
  double millis = 0.0;
  double limit = 0.0;
  bool ok() const { return millis < limit; }
};

struct CheckResult {
  std::string id;
  std::string anchor;  // the claim being reproduced, in words
  Status status = Status::pass;
  std::size_t residual_count = 0;
  std::vector<std::string> details;
  std::vector<TimeLimit> limits;
  double millis = 0.0;
};

/// Collects assertions for one check. A failed assertion or a nonzero
/// residual makes the check fail; nothing aborts early.
class CheckLog {
 public:
  void expect(bool ok, const std::string& what);
  /// Records `terms` nonzero residual terms (0 passes).
  void residual(std::size_t terms, const std::string& what);
  void note(const std::string& what);
  void within(const std::string& what, double millis, double limit);
  bool ok() const { return failures_ == 0 && residuals_ == 0; }
  CheckResult finish(std::string id, std::string anchor) const;

 private:
  std::vector<std::string> lines_;
  std::vector<TimeLimit> limits_;
  std::size_t failures_ = 0;
  std::size_t residuals_ = 0;
};

}  // namespace covforge
