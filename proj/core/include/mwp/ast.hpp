#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "mwp/diagnostic.hpp"

namespace mwp::ast {

struct Var {
  std::string name;
  friend bool operator==(const Var&, const Var&) = default;
};

struct Const {
  std::int64_t value = 0;
  friend bool operator==(const Const&, const Const&) = default;
};

using Atom = std::variant<Var, Const>;

enum class BinaryOp : char { Add = '+', Sub = '-', Mul = '*' };

/// Operands are atoms; nested expressions are rejected by the parser.
struct BinOp {
  BinaryOp op = BinaryOp::Add;
  Atom left;
  Atom right;
  friend bool operator==(const BinOp&, const BinOp&) = default;
};

using Expr = std::variant<Var, Const, BinOp>;

struct Stmt;
using Block = std::vector<Stmt>;

struct Assign {
  std::string target;
  Expr expr;
  friend bool operator==(const Assign&, const Assign&) = default;
};

// Guards of conditionals and loops carry no flow, so they are not stored.
struct If {
  Block then_branch;
  Block else_branch;
  friend bool operator==(const If&, const If&) = default;
};

struct While {
  Block body;
  friend bool operator==(const While&, const While&) = default;
};

struct Skip {
  friend bool operator==(const Skip&, const Skip&) = default;
};

struct Stmt {
  std::variant<Assign, If, While, Skip> node;
  SourceLocation location;
  friend bool operator==(const Stmt&, const Stmt&) = default;
};

struct Declaration {
  std::string name;
  SourceLocation location;
  friend bool operator==(const Declaration&, const Declaration&) = default;
};

struct FunctionDef {
  std::string name;
  std::vector<Declaration> params;
  Block body;
  /// Locals in declaration order.
  std::vector<Declaration> declared_vars;
  SourceLocation location;
  friend bool operator==(const FunctionDef&, const FunctionDef&) = default;
};

struct Program {
  std::vector<FunctionDef> functions;
  friend bool operator==(const Program&, const Program&) = default;
};

/// Pretty-prints back to the accepted C subset. Guards print as `1`.
std::string to_source(const FunctionDef& fn);
std::string to_source(const Program& program);

}  // namespace mwp::ast
