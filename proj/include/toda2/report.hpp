#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace toda2 {

/// Parameters shared by every check run.
struct RunInfo {
  std::string algebra;
  std::string bracket = "-";
  int samples = 0;
  std::uint64_t seed = 0;
};

/// One verified claim. The verdict is derived from measured/expected by the
/// factories, never set independently.
struct CheckReport {
  enum class Comparison { Less, Equal };

  std::string id;
  std::string claim;
  RunInfo run;
  double tolerance = 0.0;
  double measured = 0.0;
  double expected = 0.0;
  Comparison comparison = Comparison::Less;
  bool pass = false;
  std::string note;

  /// Passes iff measured is finite and strictly below tolerance.
  static CheckReport residual(std::string id, std::string claim, RunInfo run, double measured, double tolerance,
                              std::string note = {});
  /// Passes iff measured equals expected exactly (ranks, counts).
  static CheckReport equality(std::string id, std::string claim, RunInfo run, double measured, double expected,
                              std::string note = {});

  /// Recomputes the verdict from the stored fields.
  bool consistent() const;
};

enum class ReportFormat { Text, Json };

/// Text: one line per report. Json: an array of objects, byte-stable for
/// identical input. An empty list yields an empty document.
std::string emit_report(const std::vector<CheckReport>& reports, ReportFormat format);

/// Inverse of emit_report for the Json format.
std::vector<CheckReport> parse_reports(const std::string& json_document);

bool all_pass(const std::vector<CheckReport>& reports);

}  // namespace toda2
