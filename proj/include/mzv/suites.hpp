#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mzv/relations.hpp"

namespace mzv {

/// Outcome of one verification case.
struct CaseResult {
  std::string id;
  bool passed = false;
  /// |lhs - rhs| (or the certificate residual) in scientific notation; "0" for exact checks.
  std::string residual = "0";
  std::optional<RelationCertificate> certificate;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CaseResult> cases;

  [[nodiscard]] bool passed() const;
  [[nodiscard]] std::size_t failures() const;
};

struct SuiteOptions {
  int precision_digits = 60;
  int guard_digits = 10;
  std::optional<std::filesystem::path> cache_path;
  BasisConfig basis;
  CertifyConfig certify;
  /// Re-evaluate every certificate at precision + 20 digits.
  bool soundness_recheck = true;
};

/// Names accepted by run_suite, in a stable order.
const std::vector<std::string>& suite_names();

/// Runs one named identity suite. Throws std::invalid_argument for unknown names.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

}  // namespace mzv
