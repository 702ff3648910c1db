#include "mwp/analysis.hpp"

#include <algorithm>

#include "mwp/frontend.hpp"

namespace mwp {

namespace {

std::size_t slot_of(const std::vector<std::string>& vars, const std::string& name) {
  auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) throw InternalError("unknown variable '" + name + "'");
  return static_cast<std::size_t>(it - vars.begin());
}

const std::string* var_name(const ast::Atom& atom) {
  if (auto v = std::get_if<ast::Var>(&atom)) return &v->name;
  return nullptr;
}

// Column of dependencies for `expr`, indexed by variable slot.
std::vector<Polynomial> dependency_vector(const ast::Expr& expr, DerivationContext& ctx,
                                          const std::vector<std::string>& vars,
                                          SourceLocation site) {
  std::vector<Polynomial> column(vars.size());
  if (auto v = std::get_if<ast::Var>(&expr)) {
    column[slot_of(vars, v->name)] = Polynomial(Coefficient::M);
    return column;
  }
  const auto* bin = std::get_if<ast::BinOp>(&expr);
  if (!bin) return column;

  const auto* left = var_name(bin->left);
  const auto* right = var_name(bin->right);
  if (!left && !right) return column;

  const auto k = ctx.fresh(site);
  auto add_operand = [&](const std::string* name, Coefficient OperandRule::*side) {
    if (!name) return;
    std::vector<Monomial> monos;
    for (std::uint8_t alt = 0; alt < kAlternatives; ++alt) {
      monos.emplace_back(kOperandRules[alt].*side, DeltaList{Delta{alt, k}});
    }
    auto& entry = column[slot_of(vars, *name)];
    entry = poly_add(entry, Polynomial(std::move(monos)));
  };
  add_operand(left, &OperandRule::left);
  add_operand(right, &OperandRule::right);
  return column;
}

}  // namespace

const AnalysisResult* ProgramAnalysis::find(std::string_view name) const {
  for (const auto& f : functions) {
    if (f.function == name) return &f;
  }
  return nullptr;
}

Relation assign_vector(const std::string& target, const ast::Expr& expr, DerivationContext& ctx,
                       const std::vector<std::string>& vars, SourceLocation site) {
  auto matrix = FlowMatrix::identity(vars.size());
  const auto col = slot_of(vars, target);
  auto column = dependency_vector(expr, ctx, vars, site);
  for (std::size_t row = 0; row < vars.size(); ++row) matrix.at(row, col) = std::move(column[row]);
  return Relation(vars, std::move(matrix));
}

Relation compute_relation(const ast::Block& stmts, DerivationContext& ctx,
                          const std::vector<std::string>& vars) {
  const Relation identity(vars);
  RelationList sequence;
  for (const auto& stmt : stmts) {
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, ast::Assign>) {
            sequence.relations.push_back(
                assign_vector(node.target, node.expr, ctx, vars, stmt.location));
          } else if constexpr (std::is_same_v<T, ast::If>) {
            RelationList branches;
            branches.relations.push_back(compute_relation(node.then_branch, ctx, vars));
            branches.relations.push_back(compute_relation(node.else_branch, ctx, vars));
            sequence.relations.push_back(branches.sum_all(identity));
          } else if constexpr (std::is_same_v<T, ast::While>) {
            sequence.relations.push_back(while_close(compute_relation(node.body, ctx, vars)));
          }
        },
        stmt.node);
  }
  return sequence.compose_all(identity);
}

Evaluation evaluate(const Relation& rel, std::uint32_t num_indices) {
  Evaluation out;
  const auto& m = rel.matrix();
  for (std::size_t col = 0; col < rel.size(); ++col) {
    DeltaGraph column_graph;
    for (std::size_t row = 0; row < rel.size(); ++row) {
      for (const auto& mono : m.at(row, col).monomials()) {
        if (mono.scalar() != Coefficient::Inf) continue;
        out.forbidden.insert(mono.deltas());
        column_graph.insert(mono.deltas());
      }
    }
    if (column_graph.empty()) continue;
    column_graph.fusion();
    if (!has_passing_assignment(column_graph, num_indices)) {
      out.infinite_vars.push_back(rel.variables()[col]);
    }
  }
  out.forbidden.fusion();
  out.passing = passing_assignments(out.forbidden, num_indices);
  return out;
}

AnalysisResult analyze_function(const ast::FunctionDef& fn, const AnalysisOptions& options) {
  const auto vars = collect_variables(fn);
  DerivationContext ctx;
  AnalysisResult result;
  result.function = fn.name;
  result.relation = compute_relation(fn.body, ctx, vars);
  result.num_indices = ctx.next_index;
  result.index_sites = std::move(ctx.index_sites);
  if (options.evaluate) result.evaluation = evaluate(result.relation, result.num_indices);
  return result;
}

ProgramAnalysis analyze(const ast::Program& program, const AnalysisOptions& options) {
  ProgramAnalysis out;
  for (const auto& fn : program.functions) {
    try {
      out.functions.push_back(analyze_function(fn, options));
    } catch (const FrontendError& e) {
      out.diagnostics.push_back(e.diagnostic());
    }
  }
  return out;
}

ProgramAnalysis analyze_source(std::string_view source, const AnalysisOptions& options) {
  auto parsed = parse_translation_unit(source);
  if (parsed.functions.empty() && parsed.diagnostics.empty()) {
    parsed.diagnostics.push_back(
        Diagnostic{DiagnosticKind::SyntaxError, {1, 1}, "no function definition found"});
  }
  auto out = analyze(ast::Program{std::move(parsed.functions)}, options);
  out.diagnostics.insert(out.diagnostics.end(), parsed.diagnostics.begin(),
                         parsed.diagnostics.end());
  std::sort(out.diagnostics.begin(), out.diagnostics.end(),
            [](const Diagnostic& a, const Diagnostic& b) { return a.location < b.location; });
  return out;
}

}  // namespace mwp
