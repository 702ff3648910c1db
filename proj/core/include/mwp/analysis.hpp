#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mwp/ast.hpp"
#include "mwp/delta_graph.hpp"
#include "mwp/relation.hpp"

namespace mwp {

/// Hands out derivation indices, one per binary operation over at least one
/// variable, in program order.
struct DerivationContext {
  std::uint32_t next_index = 0;
  std::vector<SourceLocation> index_sites;

  std::uint32_t fresh(SourceLocation site) {
    index_sites.push_back(site);
    return next_index++;
  }
};

/// Alternatives at a derivation point, as (left, right) operand coefficients.
struct OperandRule {
  Coefficient left;
  Coefficient right;
};

/// Same table for +, - and *.
inline constexpr OperandRule kOperandRules[kAlternatives] = {
    {Coefficient::W, Coefficient::W},
    {Coefficient::M, Coefficient::P},
    {Coefficient::P, Coefficient::M},
};

struct Evaluation {
  /// Assignments under which no matrix entry is infinite.
  ChoiceSet passing;
  /// Variables whose column holds an infinite entry under every assignment.
  std::vector<std::string> infinite_vars;
  /// Forbidden fragments after subsumption and fusion.
  DeltaGraph forbidden;
};

struct AnalysisResult {
  std::string function;
  Relation relation;
  std::uint32_t num_indices = 0;
  std::vector<SourceLocation> index_sites;
  /// Absent when evaluation was skipped.
  std::optional<Evaluation> evaluation;

  bool polynomial() const { return evaluation && !evaluation->passing.empty(); }
};

struct AnalysisOptions {
  bool evaluate = true;
};

struct ProgramAnalysis {
  std::vector<AnalysisResult> functions;
  std::vector<Diagnostic> diagnostics;

  const AnalysisResult* find(std::string_view name) const;
};

/// Relation of `target = expr` over `vars`: identity except for the target's
/// column, which receives the dependencies of `expr`.
Relation assign_vector(const std::string& target, const ast::Expr& expr, DerivationContext& ctx,
                       const std::vector<std::string>& vars, SourceLocation site = {});

Relation compute_relation(const ast::Block& stmts, DerivationContext& ctx,
                          const std::vector<std::string>& vars);

Evaluation evaluate(const Relation& rel, std::uint32_t num_indices);

/// Throws FrontendError when the function's declarations are inconsistent.
AnalysisResult analyze_function(const ast::FunctionDef& fn, const AnalysisOptions& options = {});

/// Analyzes every function; rejected functions become diagnostics.
ProgramAnalysis analyze(const ast::Program& program, const AnalysisOptions& options = {});

/// Parses and analyzes. Results and diagnostics are ordered by source position.
ProgramAnalysis analyze_source(std::string_view source, const AnalysisOptions& options = {});

}  // namespace mwp
