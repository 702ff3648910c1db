#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mwp/analysis.hpp"

namespace mwp {

/// Bumped whenever the report layout changes incompatibly.
inline constexpr std::string_view kReportSchema = "mwp-report/1";

enum class Verdict { Polynomial, Infinite, NotEvaluated };

std::string_view to_string(Verdict v) noexcept;

struct FunctionReport {
  std::string name;
  Relation relation;
  std::uint32_t num_indices = 0;
  Verdict verdict = Verdict::NotEvaluated;
  std::vector<std::string> infinite_vars;
  /// Compact passing set; absent when not evaluated.
  std::optional<ChoiceSet> choices;

  friend bool operator==(const FunctionReport&, const FunctionReport&) = default;
};

struct Report {
  std::string schema{kReportSchema};
  std::string tool_version;
  std::string file;
  /// Only recorded on request; excluded from byte-for-byte comparisons.
  std::optional<double> wall_time_seconds;
  std::vector<FunctionReport> functions;
  std::vector<Diagnostic> diagnostics;

  friend bool operator==(const Report&, const Report&) = default;
};

/// I/O or format failure, with the offending path in the message.
class ReportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Report make_report(const ProgramAnalysis& analysis, std::string file);

/// Pretty-printed JSON with a fixed key order.
std::string serialize_report(const Report& report);
Report parse_report(std::string_view text);

void save_report(const Report& report, const std::filesystem::path& path);
Report load_report(const std::filesystem::path& path);

}  // namespace mwp
