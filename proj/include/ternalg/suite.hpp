#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ternalg/exactnum.hpp"
#include "ternalg/paraspace.hpp"
#include "ternalg/report.hpp"

namespace ternalg {

struct SuiteSpec {
  std::string suite = "all";
  int dimension = 4;
  std::uint64_t seed = 1;
  Rational kappa{1, 2};
  int cross_sign = 1;
  int engine_samples = 100;
  int oracle_samples = 200;

  static const std::vector<std::string>& suite_ids();
  /// Throws std::invalid_argument for an unknown suite or bad configuration.
  void validate() const;
  SuperspaceConfig config() const;
};

/// Deterministic for a given spec; reports sorted by check_id.
std::vector<CheckReport> run_suite(const SuiteSpec& spec);

bool all_passed(const std::vector<CheckReport>& reports);

enum class ReportFormat { kText, kJson };
std::string emit_report(const std::vector<CheckReport>& reports, const SuiteSpec& spec, ReportFormat format);

struct ReportDocument {
  std::string version;
  int dimension = 0;
  std::vector<int> metric;
  std::string kappa;
  int cross_sign = 1;
  std::uint64_t seed = 0;
  std::vector<CheckReport> checks;
};

/// Reads a JSON report produced by emit_report.
ReportDocument parse_report(std::string_view json);

}  // namespace ternalg
