#include "covforge/check.hpp"

namespace covforge {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

void CheckLog::expect(bool ok, const std::string& what) {
  if (!ok) ++failures_;
  lines_.push_back((ok ? "ok    " : "FAIL  ") + what);
}

void CheckLog::residual(std::size_t terms, const std::string& what) {
  residuals_ += terms;
  lines_.push_back((terms == 0 ? "ok    " : "FAIL  ") + what + ": " + std::to_string(terms) + " residual terms");
}

void CheckLog::note(const std::string& what) { lines_.push_back("note  " + what); }

void CheckLog::within(const std::string& what, double millis, double limit) {
  limits_.push_back({what, millis, limit});
  if (!limits_.back().ok()) ++failures_;
}

CheckResult CheckLog::finish(std::string id, std::string anchor) const {
  CheckResult r;
  r.id = std::move(id);
  r.anchor = std::move(anchor);
  r.status = ok() ? Status::pass : Status::fail;
  r.residual_count = residuals_ + failures_;
  r.details = lines_;
  r.limits = limits_;
  return r;
}

}  // namespace covforge
