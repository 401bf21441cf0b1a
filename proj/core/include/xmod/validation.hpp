#pragma once

#include <string>
#include <vector>

#include "xmod/errors.hpp"

namespace xmod {

/// One failed check. `axiom` is a short stable id such as "CM1" or
/// "relation-boundary"; `witness` holds the concrete values that break it.
struct Violation {
  std::string axiom;
  std::vector<std::string> witness;
  std::string detail;

  std::string to_string() const;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string axiom, std::vector<std::string> witness, std::string detail = {});
  std::string to_string() const;
};

/// Thrown by constructors that refuse to build an invalid algebraic object.
class AxiomViolation : public Error {
 public:
  explicit AxiomViolation(ValidationReport report)
      : Error("axiom violation: " + report.to_string()), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

}  // namespace xmod
