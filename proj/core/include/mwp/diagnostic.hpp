#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mwp {

struct SourceLocation {
  std::uint32_t line = 0;
  std::uint32_t column = 0;

  friend bool operator==(const SourceLocation&, const SourceLocation&) = default;
  friend auto operator<=>(const SourceLocation&, const SourceLocation&) = default;
};

enum class DiagnosticKind {
  SyntaxError,
  UnsupportedConstruct,
  UndeclaredVariable,
  DuplicateDeclaration,
};

std::string_view category(DiagnosticKind kind) noexcept;

struct Diagnostic {
  DiagnosticKind kind = DiagnosticKind::SyntaxError;
  SourceLocation location;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

/// "file:line:col: category: message"
std::string format_diagnostic(const Diagnostic& diag, std::string_view file);

/// Thrown by the frontend for input outside the supported language.
class FrontendError : public std::runtime_error {
 public:
  explicit FrontendError(Diagnostic diag);
  const Diagnostic& diagnostic() const noexcept { return diag_; }

 private:
  Diagnostic diag_;
};

}  // namespace mwp
