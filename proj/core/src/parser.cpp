#include <algorithm>
#include <charconv>
#include <optional>
#include <set>
#include <unordered_set>

#include "lexer.hpp"
#include "mwp/frontend.hpp"

namespace mwp {

namespace {

using detail::Token;
using detail::TokenKind;

const std::unordered_set<std::string_view> kOtherTypes = {
    "char", "short", "long", "float", "double", "signed", "unsigned", "_Bool", "_Complex"};

const std::unordered_set<std::string_view> kAggregateTypes = {"struct", "union", "enum"};

const std::unordered_set<std::string_view> kQualifiers = {
    "const", "volatile", "static", "extern", "register", "auto", "inline", "restrict", "typedef"};

const std::unordered_set<std::string_view> kReserved = {
    "int",  "void",   "if",     "else",  "while",    "for",  "do",
    "return", "switch", "case", "default", "break", "continue", "goto", "sizeof"};

const std::set<std::string_view> kArithmetic = {"+", "-", "*"};

const std::set<std::string_view> kOtherBinary = {"/",  "%",  "<<", ">>", "&",  "|", "^",
                                                 "<",  ">",  "<=", ">=", "==", "!=", "&&",
                                                 "||"};

const std::set<std::string_view> kCompoundAssign = {"+=", "-=", "*=", "/=", "%=",
                                                    "&=", "|=", "^=", "<<=", ">>="};

[[noreturn]] void fail(DiagnosticKind kind, SourceLocation at, std::string msg) {
  throw FrontendError(Diagnostic{kind, at, std::move(msg)});
}

[[noreturn]] void unsupported(const Token& at, std::string what) {
  fail(DiagnosticKind::UnsupportedConstruct, at.location, std::move(what));
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case TokenKind::End: return "end of input";
    case TokenKind::Identifier: return "identifier '" + t.text + "'";
    case TokenKind::Integer: return "constant '" + t.text + "'";
    default: return "'" + t.text + "'";
  }
}

// Scope of one function: every declaration is function-wide, so a name
// declared twice anywhere in the body is a redeclaration.
struct Scope {
  std::set<std::string> names;

  void declare(const Token& name) {
    if (!names.insert(name.text).second) {
      fail(DiagnosticKind::DuplicateDeclaration, name.location,
           "'" + name.text + "' is already declared in this function");
    }
  }

  void require(const Token& name) const {
    if (!names.contains(name.text)) {
      fail(DiagnosticKind::UndeclaredVariable, name.location,
           "'" + name.text + "' is not declared");
    }
  }
};

class Parser {
 public:
  explicit Parser(std::string_view source) : tokens_(detail::tokenize(source)) {}

  ParseResult run() {
    ParseResult result;
    std::set<std::string> function_names;
    while (peek().kind != TokenKind::End) {
      const auto start = pos_;
      try {
        auto fn = parse_external();
        if (!fn) continue;
        if (!function_names.insert(fn->name).second) {
          fail(DiagnosticKind::DuplicateDeclaration, fn->location,
               "function '" + fn->name + "' is defined twice");
        }
        result.functions.push_back(std::move(*fn));
      } catch (const FrontendError& e) {
        result.diagnostics.push_back(e.diagnostic());
        resync(start);
      }
    }
    return result;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }

  const Token& take() {
    const Token& t = peek();
    if (t.kind == TokenKind::Invalid) fail(t.error_kind, t.location, t.text);
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }

  void check_invalid() const {
    const Token& t = peek();
    if (t.kind == TokenKind::Invalid) fail(t.error_kind, t.location, t.text);
  }

  const Token& expect(std::string_view punct, std::string_view context) {
    check_invalid();
    if (!peek().is(punct)) {
      fail(DiagnosticKind::SyntaxError, peek().location,
           "expected '" + std::string(punct) + "' " + std::string(context) + ", found " +
               describe(peek()));
    }
    return take();
  }

  const Token& expect_identifier(std::string_view context) {
    check_invalid();
    const auto& t = peek();
    if (t.kind != TokenKind::Identifier || kReserved.contains(t.text) ||
        kOtherTypes.contains(t.text) || kQualifiers.contains(t.text) ||
        kAggregateTypes.contains(t.text)) {
      fail(DiagnosticKind::SyntaxError, t.location,
           "expected identifier " + std::string(context) + ", found " + describe(t));
    }
    return take();
  }

  // After an error, skip the rest of the external declaration that started at
  // token `start`: up to the first top-level ';' or past the first balanced
  // brace block.
  void resync(std::size_t start) {
    pos_ = start;
    int depth = 0;
    while (peek().kind != TokenKind::End) {
      const auto& t = tokens_[pos_];
      ++pos_;
      if (t.is("{")) {
        ++depth;
      } else if (t.is("}")) {
        if (--depth <= 0) return;
      } else if (t.is(";") && depth == 0) {
        return;
      }
    }
  }

  // Rejects type specifiers other than plain `int`/`void`.
  void check_type_keyword(const Token& t) const {
    if (kOtherTypes.contains(t.text)) unsupported(t, "non-integer type '" + t.text + "'");
    if (kAggregateTypes.contains(t.text)) unsupported(t, t.text + " type");
    if (t.text == "typedef") unsupported(t, "typedef");
    if (kQualifiers.contains(t.text)) unsupported(t, "type qualifier '" + t.text + "'");
  }

  bool at_type() const {
    const auto& t = peek();
    return t.kind == TokenKind::Identifier &&
           (t.text == "int" || t.text == "void" || kOtherTypes.contains(t.text) ||
            kAggregateTypes.contains(t.text) || kQualifiers.contains(t.text));
  }

  void reject_declarator_suffix() {
    if (peek().is("[")) unsupported(peek(), "array declarator");
  }

  // One external declaration: a function definition (returned), a prototype
  // (skipped), or an unsupported global.
  std::optional<ast::FunctionDef> parse_external() {
    check_invalid();
    const auto& type = peek();
    if (type.kind != TokenKind::Identifier) {
      fail(DiagnosticKind::SyntaxError, type.location,
           "expected a function definition, found " + describe(type));
    }
    check_type_keyword(type);
    if (type.text != "int" && type.text != "void") {
      fail(DiagnosticKind::SyntaxError, type.location,
           "expected a function definition, found " + describe(type));
    }
    take();
    if (peek().is("*")) unsupported(peek(), "pointer declarator");

    ast::FunctionDef fn;
    const auto& name = expect_identifier("after return type");
    fn.name = name.text;
    fn.location = type.location;
    if (!peek().is("(")) {
      if (peek().is("=") || peek().is(";") || peek().is(",") || peek().is("[")) {
        unsupported(name, "global variable");
      }
      expect("(", "after function name");
    }
    take();

    Scope scope;
    parse_parameters(fn, scope);

    if (peek().is(";")) {
      take();
      return std::nullopt;
    }
    expect("{", "to open the function body");
    parse_block_items(fn, scope, fn.body);
    return fn;
  }

  void parse_parameters(ast::FunctionDef& fn, Scope& scope) {
    if (peek().is_word("void") && peek(1).is(")")) {
      take();
      take();
      return;
    }
    if (peek().is(")")) {
      take();
      return;
    }
    while (true) {
      check_invalid();
      const auto& type = peek();
      check_type_keyword(type);
      if (!type.is_word("int")) {
        fail(DiagnosticKind::SyntaxError, type.location,
             "expected 'int' parameter, found " + describe(type));
      }
      take();
      if (peek().is("*")) unsupported(peek(), "pointer declarator");
      const auto& name = expect_identifier("as parameter name");
      reject_declarator_suffix();
      scope.declare(name);
      fn.params.push_back({name.text, name.location});
      if (peek().is(",")) {
        take();
        continue;
      }
      expect(")", "after parameters");
      return;
    }
  }

  // Statements up to the closing brace (consumed).
  void parse_block_items(ast::FunctionDef& fn, Scope& scope, ast::Block& out) {
    while (true) {
      check_invalid();
      if (peek().is("}")) {
        take();
        return;
      }
      if (peek().kind == TokenKind::End) {
        fail(DiagnosticKind::SyntaxError, peek().location, "expected '}' before end of input");
      }
      parse_statement(fn, scope, out);
    }
  }

  void parse_statement(ast::FunctionDef& fn, Scope& scope, ast::Block& out) {
    check_invalid();
    const Token& t = peek();
    const auto loc = t.location;

    if (t.is(";")) {
      take();
      out.push_back({ast::Skip{}, loc});
      return;
    }
    if (t.is("{")) {
      take();
      parse_block_items(fn, scope, out);
      return;
    }
    if (at_type()) {
      parse_declaration(fn, scope, out);
      return;
    }
    if (t.kind == TokenKind::Identifier) {
      if (t.text == "if") return parse_if(fn, scope, out);
      if (t.text == "while") return parse_while(fn, scope, out);
      if (t.text == "for") unsupported(t, "for loop");
      if (t.text == "do") unsupported(t, "do-while loop");
      if (t.text == "switch") unsupported(t, "switch statement");
      if (t.text == "goto") unsupported(t, "goto statement");
      if (t.text == "break") unsupported(t, "break statement");
      if (t.text == "continue") unsupported(t, "continue statement");
      if (t.text == "return") return parse_return(scope, out);
      if (t.text == "else") {
        fail(DiagnosticKind::SyntaxError, loc, "'else' without a matching 'if'");
      }
      if (t.text == "sizeof") unsupported(t, "sizeof operator");
      return parse_assignment(scope, out);
    }
    if (t.is("*")) unsupported(t, "pointer dereference");
    if (t.is("++") || t.is("--")) unsupported(t, "increment/decrement operator");
    fail(DiagnosticKind::SyntaxError, loc, "expected a statement, found " + describe(t));
  }

  void parse_declaration(ast::FunctionDef& fn, Scope& scope, ast::Block& out) {
    const auto& type = peek();
    check_type_keyword(type);
    if (!type.is_word("int")) {
      fail(DiagnosticKind::SyntaxError, type.location,
           "expected 'int' declaration, found " + describe(type));
    }
    take();
    while (true) {
      if (peek().is("*")) unsupported(peek(), "pointer declarator");
      const auto& name = expect_identifier("in declaration");
      reject_declarator_suffix();
      if (peek().is("(")) unsupported(name, "nested function declaration");
      scope.declare(name);
      fn.declared_vars.push_back({name.text, name.location});
      if (peek().is("=")) {
        take();
        auto expr = parse_rhs(scope);
        out.push_back({ast::Assign{name.text, std::move(expr)}, name.location});
      }
      if (peek().is(",")) {
        take();
        continue;
      }
      expect(";", "after declaration");
      return;
    }
  }

  void parse_if(ast::FunctionDef& fn, Scope& scope, ast::Block& out) {
    const auto loc = take().location;
    parse_guard(scope);
    ast::If node;
    parse_statement(fn, scope, node.then_branch);
    if (peek().is_word("else")) {
      take();
      parse_statement(fn, scope, node.else_branch);
    }
    out.push_back({std::move(node), loc});
  }

  void parse_while(ast::FunctionDef& fn, Scope& scope, ast::Block& out) {
    const auto loc = take().location;
    parse_guard(scope);
    ast::While node;
    parse_statement(fn, scope, node.body);
    out.push_back({std::move(node), loc});
  }

  // `return;` or `return <expr>;`. The returned value adds no flow between
  // variables, so the statement is analysed as a skip.
  void parse_return(Scope& scope, ast::Block& out) {
    const auto loc = take().location;
    if (!peek().is(";")) validate_expression(scope, 0);
    expect(";", "after return");
    out.push_back({ast::Skip{}, loc});
  }

  void parse_assignment(Scope& scope, ast::Block& out) {
    const auto& target = expect_identifier("at start of statement");
    check_invalid();
    const auto& next = peek();
    if (next.is("(")) unsupported(target, "function call");
    if (next.is("[")) unsupported(next, "array subscript");
    if (next.is("++") || next.is("--")) unsupported(next, "increment/decrement operator");
    if (next.is(".") || next.is("->")) unsupported(next, "member access");
    if (kCompoundAssign.contains(next.text) && next.kind == TokenKind::Punct) {
      unsupported(next, "compound assignment '" + next.text +
                            "'; write it as a plain assignment such as 'x = x + y'");
    }
    expect("=", "in assignment");
    scope.require(target);
    auto expr = parse_rhs(scope);
    expect(";", "after assignment");
    out.push_back({ast::Assign{target.text, std::move(expr)}, target.location});
  }

  ast::Atom parse_atom(Scope& scope) {
    check_invalid();
    const auto& t = peek();
    if (t.kind == TokenKind::Integer) return ast::Const{parse_integer(take())};
    if (t.is("-") && peek(1).kind == TokenKind::Integer) {
      take();
      return ast::Const{-parse_integer(take())};
    }
    if (t.is("(")) {
      unsupported(t, "nested expression; split it into separate assignments");
    }
    if (t.is("&")) unsupported(t, "address-of operator (pointer)");
    if (t.is("*")) unsupported(t, "pointer dereference");
    if (t.is("-") || t.is("+") || t.is("!") || t.is("~")) {
      unsupported(t, "unary operator '" + t.text + "'");
    }
    if (t.is("++") || t.is("--")) unsupported(t, "increment/decrement operator");
    if (t.is_word("sizeof")) unsupported(t, "sizeof operator");
    const auto& name = expect_identifier("in expression");
    if (peek().is("(")) unsupported(name, "function call");
    if (peek().is("[")) unsupported(peek(), "array subscript");
    if (peek().is("++") || peek().is("--")) unsupported(peek(), "increment/decrement operator");
    if (peek().is(".") || peek().is("->")) unsupported(peek(), "member access");
    scope.require(name);
    return ast::Var{name.text};
  }

  static std::int64_t parse_integer(const Token& t) {
    std::string digits = t.text;
    while (!digits.empty() && (digits.back() == 'u' || digits.back() == 'U' ||
                               digits.back() == 'l' || digits.back() == 'L')) {
      digits.pop_back();
    }
    if (digits.find_first_of(".eE") != std::string::npos &&
        !(digits.size() > 1 && (digits[1] == 'x' || digits[1] == 'X'))) {
      unsupported(t, "floating constant");
    }
    int base = 10;
    std::string_view body = digits;
    if (body.size() > 2 && body[0] == '0' && (body[1] == 'x' || body[1] == 'X')) {
      base = 16;
      body.remove_prefix(2);
    } else if (body.size() > 1 && body[0] == '0') {
      base = 8;
      body.remove_prefix(1);
    }
    std::int64_t value = 0;
    auto [end, ec] = std::from_chars(body.data(), body.data() + body.size(), value, base);
    if (ec != std::errc{} || end != body.data() + body.size()) {
      fail(DiagnosticKind::SyntaxError, t.location, "malformed integer constant '" + t.text + "'");
    }
    return value;
  }

  ast::Expr parse_rhs(Scope& scope) {
    auto lhs = parse_atom(scope);
    check_invalid();
    const auto& op = peek();
    if (op.is(";") || op.is(",")) return to_expr(std::move(lhs));
    check_operator(op);
    take();
    auto rhs = parse_atom(scope);
    check_invalid();
    const auto& after = peek();
    if (after.kind == TokenKind::Punct &&
        (kArithmetic.contains(after.text) || kOtherBinary.contains(after.text))) {
      unsupported(after, "n-ary expression; split it into separate binary assignments");
    }
    if (after.is("=")) unsupported(after, "chained assignment");
    if (after.is("?")) unsupported(after, "conditional operator");
    if (!after.is(";") && !after.is(",")) {
      fail(DiagnosticKind::SyntaxError, after.location,
           "expected ';' after expression, found " + describe(after));
    }
    return ast::BinOp{static_cast<ast::BinaryOp>(op.text[0]), std::move(lhs), std::move(rhs)};
  }

  void check_operator(const Token& op) const {
    if (op.kind == TokenKind::Punct && kArithmetic.contains(op.text)) return;
    if (op.kind == TokenKind::Punct && kOtherBinary.contains(op.text)) {
      unsupported(op, "operator '" + op.text + "'");
    }
    if (op.is("=")) unsupported(op, "chained assignment");
    if (op.is("?")) unsupported(op, "conditional operator");
    fail(DiagnosticKind::SyntaxError, op.location,
         "expected ';' after expression, found " + describe(op));
  }

  static ast::Expr to_expr(ast::Atom atom) {
    return std::visit([](auto&& a) -> ast::Expr { return a; }, std::move(atom));
  }

  void parse_guard(Scope& scope) {
    expect("(", "before condition");
    validate_expression(scope, 0);
    expect(")", "after condition");
  }

  // Precedence-climbing check of a full C expression over the permitted
  // operators. Nothing is built: conditions carry no flow.
  static int precedence(const Token& t) {
    if (t.kind != TokenKind::Punct) return -1;
    static const std::pair<std::string_view, int> table[] = {
        {"||", 1}, {"&&", 2}, {"|", 3},  {"^", 4},  {"&", 5},  {"==", 6}, {"!=", 6},
        {"<", 7},  {">", 7},  {"<=", 7}, {">=", 7}, {"<<", 8}, {">>", 8}, {"+", 9},
        {"-", 9},  {"*", 10}, {"/", 10}, {"%", 10}};
    for (const auto& [text, prec] : table) {
      if (t.text == text) return prec;
    }
    return -1;
  }

  void validate_expression(Scope& scope, int min_prec) {
    validate_unary(scope);
    while (true) {
      check_invalid();
      const auto& op = peek();
      if (op.is("=") || (op.kind == TokenKind::Punct && kCompoundAssign.contains(op.text))) {
        unsupported(op, "assignment inside an expression");
      }
      if (op.is("?")) unsupported(op, "conditional operator");
      if (op.is(",")) unsupported(op, "comma operator");
      const int prec = precedence(op);
      if (prec < 0 || prec < min_prec) return;
      take();
      validate_expression(scope, prec + 1);
    }
  }

  void validate_unary(Scope& scope) {
    check_invalid();
    const auto& t = peek();
    if (t.is("!") || t.is("-") || t.is("+") || t.is("~")) {
      take();
      validate_unary(scope);
      return;
    }
    if (t.is("(")) {
      take();
      validate_expression(scope, 0);
      expect(")", "to close parenthesized expression");
      return;
    }
    if (t.kind == TokenKind::Integer) {
      parse_integer(take());
      return;
    }
    if (t.is("&")) unsupported(t, "address-of operator (pointer)");
    if (t.is("*")) unsupported(t, "pointer dereference");
    if (t.is("++") || t.is("--")) unsupported(t, "increment/decrement operator");
    if (t.is_word("sizeof")) unsupported(t, "sizeof operator");
    const auto& name = expect_identifier("in condition");
    if (peek().is("(")) unsupported(name, "function call");
    if (peek().is("[")) unsupported(peek(), "array subscript");
    if (peek().is("++") || peek().is("--")) unsupported(peek(), "increment/decrement operator");
    if (peek().is(".") || peek().is("->")) unsupported(peek(), "member access");
    scope.require(name);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

void check_uses(const ast::Block& block, const std::set<std::string>& declared) {
  auto require = [&](const std::string& name, SourceLocation at) {
    if (!declared.contains(name)) {
      fail(DiagnosticKind::UndeclaredVariable, at, "'" + name + "' is not declared");
    }
  };
  auto require_atom = [&](const ast::Atom& atom, SourceLocation at) {
    if (auto v = std::get_if<ast::Var>(&atom)) require(v->name, at);
  };
  for (const auto& stmt : block) {
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, ast::Assign>) {
            require(node.target, stmt.location);
            std::visit(
                [&](const auto& e) {
                  using E = std::decay_t<decltype(e)>;
                  if constexpr (std::is_same_v<E, ast::Var>) {
                    require(e.name, stmt.location);
                  } else if constexpr (std::is_same_v<E, ast::BinOp>) {
                    require_atom(e.left, stmt.location);
                    require_atom(e.right, stmt.location);
                  }
                },
                node.expr);
          } else if constexpr (std::is_same_v<T, ast::If>) {
            check_uses(node.then_branch, declared);
            check_uses(node.else_branch, declared);
          } else if constexpr (std::is_same_v<T, ast::While>) {
            check_uses(node.body, declared);
          }
        },
        stmt.node);
  }
}

}  // namespace

std::string_view category(DiagnosticKind kind) noexcept {
  switch (kind) {
    case DiagnosticKind::SyntaxError: return "syntax error";
    case DiagnosticKind::UnsupportedConstruct: return "unsupported construct";
    case DiagnosticKind::UndeclaredVariable: return "undeclared variable";
    case DiagnosticKind::DuplicateDeclaration: return "duplicate declaration";
  }
  return "error";
}

std::string format_diagnostic(const Diagnostic& diag, std::string_view file) {
  return std::string(file) + ":" + std::to_string(diag.location.line) + ":" +
         std::to_string(diag.location.column) + ": " + std::string(category(diag.kind)) + ": " +
         diag.message;
}

FrontendError::FrontendError(Diagnostic diag)
    : std::runtime_error(std::string(category(diag.kind)) + ": " + diag.message),
      diag_(std::move(diag)) {}

ParseResult parse_translation_unit(std::string_view source) { return Parser(source).run(); }

ast::Program parse(std::string_view source) {
  auto result = parse_translation_unit(source);
  if (!result.diagnostics.empty()) throw FrontendError(result.diagnostics.front());
  if (result.functions.empty()) {
    throw FrontendError(
        Diagnostic{DiagnosticKind::SyntaxError, {1, 1}, "no function definition found"});
  }
  return ast::Program{std::move(result.functions)};
}

std::vector<std::string> collect_variables(const ast::FunctionDef& fn) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  auto add = [&](const ast::Declaration& d) {
    if (!seen.insert(d.name).second) {
      fail(DiagnosticKind::DuplicateDeclaration, d.location,
           "'" + d.name + "' is already declared in this function");
    }
    out.push_back(d.name);
  };
  for (const auto& p : fn.params) add(p);
  for (const auto& v : fn.declared_vars) add(v);
  check_uses(fn.body, seen);
  return out;
}

}  // namespace mwp
