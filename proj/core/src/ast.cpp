#include "mwp/ast.hpp"

#include <sstream>

namespace mwp::ast {

namespace {

std::string atom_source(const Atom& atom) {
  if (auto v = std::get_if<Var>(&atom)) return v->name;
  return std::to_string(std::get<Const>(atom).value);
}

std::string expr_source(const Expr& expr) {
  if (auto v = std::get_if<Var>(&expr)) return v->name;
  if (auto c = std::get_if<Const>(&expr)) return std::to_string(c->value);
  const auto& b = std::get<BinOp>(expr);
  return atom_source(b.left) + " " + static_cast<char>(b.op) + " " + atom_source(b.right);
}

void print_block(std::ostringstream& os, const Block& block, int depth);

void print_stmt(std::ostringstream& os, const Stmt& stmt, int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Assign>) {
          os << pad << node.target << " = " << expr_source(node.expr) << ";\n";
        } else if constexpr (std::is_same_v<T, If>) {
          os << pad << "if (1) {\n";
          print_block(os, node.then_branch, depth + 1);
          os << pad << "}";
          if (!node.else_branch.empty()) {
            os << " else {\n";
            print_block(os, node.else_branch, depth + 1);
            os << pad << "}";
          }
          os << "\n";
        } else if constexpr (std::is_same_v<T, While>) {
          os << pad << "while (1) {\n";
          print_block(os, node.body, depth + 1);
          os << pad << "}\n";
        } else {
          os << pad << ";\n";
        }
      },
      stmt.node);
}

void print_block(std::ostringstream& os, const Block& block, int depth) {
  for (const auto& stmt : block) print_stmt(os, stmt, depth);
}

}  // namespace

std::string to_source(const FunctionDef& fn) {
  std::ostringstream os;
  os << "int " << fn.name << "(";
  for (std::size_t i = 0; i < fn.params.size(); ++i) {
    os << (i ? ", " : "") << "int " << fn.params[i].name;
  }
  os << ") {\n";
  for (const auto& v : fn.declared_vars) os << "  int " << v.name << ";\n";
  print_block(os, fn.body, 1);
  os << "}\n";
  return os.str();
}

std::string to_source(const Program& program) {
  std::string out;
  for (const auto& fn : program.functions) {
    if (!out.empty()) out += "\n";
    out += to_source(fn);
  }
  return out;
}

}  // namespace mwp::ast
