#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symfitch {

// One violated invariant. `code` is a stable machine-readable tag
// (e.g. "missing-pair", "unknown-color"), `message` is for humans.
struct ValidationIssue {
  std::string code;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const { return issues.empty(); }
  void add(std::string code, std::string message) {
    issues.push_back({std::move(code), std::move(message)});
  }
  std::string summary() const;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: carries the full report so callers can show every issue.
class ValidationError : public Error {
 public:
  explicit ValidationError(ValidationReport report);
  ValidationError(std::string code, std::string message);

  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

// Input is well formed but violates an operation's stated precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Exact search would exceed the configured leaf cap or time budget.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace symfitch
