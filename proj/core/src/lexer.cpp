#include "lexer.hpp"

#include <array>
#include <cctype>
#include <optional>

namespace mwp::detail {

namespace {

constexpr std::array<std::string_view, 22> kLongPuncts = {
    "<<=", ">>=", "==", "!=", "<=", ">=", "&&", "||", "++", "--", "+=",
    "-=",  "*=",  "/=", "%=", "&=", "|=", "^=", "->", "<<", ">>", "..."};

constexpr std::string_view kShortPuncts = "+-*/%<>=!(){}[];,&|^~?:.";

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      if (auto bad = skip_trivia()) {
        out.push_back(std::move(*bad));
        break;
      }
      if (pos_ >= src_.size()) break;
      out.push_back(next());
    }
    out.push_back(Token{TokenKind::End, "", here()});
    return out;
  }

 private:
  SourceLocation here() const { return {line_, col_}; }

  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
      at_line_start_ = true;
    } else {
      ++col_;
      if (!std::isspace(static_cast<unsigned char>(c))) at_line_start_ = false;
    }
  }

  static Token invalid(DiagnosticKind kind, SourceLocation at, std::string msg) {
    return Token{TokenKind::Invalid, std::move(msg), at, kind};
  }

  std::optional<Token> skip_trivia() {
    while (pos_ < src_.size()) {
      const char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '#' && at_line_start_) {
        // Preprocessor line, with backslash continuations.
        while (pos_ < src_.size() && peek() != '\n') {
          if (peek() == '\\' && peek(1) == '\n') advance();
          advance();
        }
      } else if (c == '/' && peek(1) == '/') {
        while (pos_ < src_.size() && peek() != '\n') advance();
      } else if (c == '/' && peek(1) == '*') {
        const auto start = here();
        advance();
        advance();
        while (pos_ < src_.size() && !(peek() == '*' && peek(1) == '/')) advance();
        if (pos_ >= src_.size()) {
          return invalid(DiagnosticKind::SyntaxError, start, "unterminated comment");
        }
        advance();
        advance();
      } else {
        break;
      }
    }
    return std::nullopt;
  }

  Token next() {
    const auto start = here();
    const char c = peek();
    if (is_ident_start(c)) {
      std::string text;
      while (is_ident_char(peek())) {
        text += peek();
        advance();
      }
      return {TokenKind::Identifier, std::move(text), start};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string text;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '.') {
        text += peek();
        advance();
      }
      return {TokenKind::Integer, std::move(text), start};
    }
    if (c == '"' || c == '\'') {
      const char quote = c;
      advance();
      while (pos_ < src_.size() && peek() != quote && peek() != '\n') {
        if (peek() == '\\') advance();
        if (pos_ < src_.size()) advance();
      }
      if (peek() == quote) advance();
      return invalid(DiagnosticKind::UnsupportedConstruct, start,
                     quote == '"' ? "string literal" : "character constant");
    }
    for (auto p : kLongPuncts) {
      if (src_.substr(pos_, p.size()) == p) {
        for (std::size_t i = 0; i < p.size(); ++i) advance();
        return {TokenKind::Punct, std::string(p), start};
      }
    }
    if (kShortPuncts.find(c) != std::string_view::npos) {
      advance();
      return {TokenKind::Punct, std::string(1, c), start};
    }
    advance();
    return invalid(DiagnosticKind::SyntaxError, start,
                   std::string("unexpected character '") + c + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::uint32_t line_ = 1;
  std::uint32_t col_ = 1;
  bool at_line_start_ = true;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

}  // namespace mwp::detail
