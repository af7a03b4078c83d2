#pragma once

#include <string>
#include <string_view>

#include "noderel/graph_expr.hpp"

namespace noderel {

/// Parses the expression language
///
///     expr := leaf ('|' op)*
///     leaf := 'P' n | 'K' n | 'E' n | 'G(' edge-list-file ')'
///     op   := 'sub' l | 'addIso' | 'addUniv'
///
/// P, K and E are the path, complete and edgeless graphs on n vertices.
/// Whitespace between tokens is ignored. Errors are ParseError with the
/// 1-based column of the offending token.
GraphExpr parse_dsl(std::string_view text);

/// Inverse of parse_dsl for expressions whose leaves carry a label.
/// Throws std::logic_error for unlabeled leaves.
std::string to_dsl(const GraphExpr& e);

}  // namespace noderel
