#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mwp/ast.hpp"
#include "mwp/diagnostic.hpp"

namespace mwp {

/// Functions that parsed cleanly plus one diagnostic per rejected function.
/// Parsing resumes after a rejected function.
struct ParseResult {
  std::vector<ast::FunctionDef> functions;
  std::vector<Diagnostic> diagnostics;
};

ParseResult parse_translation_unit(std::string_view source);

/// Strict variant: throws FrontendError on the first diagnostic, or when the
/// input defines no function.
ast::Program parse(std::string_view source);

/// Parameters in order, then locals in declaration order. Throws
/// FrontendError on a duplicate declaration or a use of an undeclared name.
std::vector<std::string> collect_variables(const ast::FunctionDef& fn);

}  // namespace mwp
