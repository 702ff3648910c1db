#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mwp/diagnostic.hpp"

namespace mwp::detail {

// Invalid tokens carry their diagnostic message as text; the parser reports
// them when it reaches them, so a bad character only spoils its function.
enum class TokenKind { Identifier, Integer, Punct, Invalid, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  SourceLocation location;
  DiagnosticKind error_kind = DiagnosticKind::SyntaxError;

  bool is(std::string_view punct) const noexcept {
    return kind == TokenKind::Punct && text == punct;
  }
  bool is_word(std::string_view word) const noexcept {
    return kind == TokenKind::Identifier && text == word;
  }
};

/// Splits C source into tokens. Comments and preprocessor lines are dropped.
/// The last token is always End.
std::vector<Token> tokenize(std::string_view source);

}  // namespace mwp::detail
