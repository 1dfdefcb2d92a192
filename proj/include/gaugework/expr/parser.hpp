#pragma once

#include <optional>
#include <set>
#include <string_view>

#include "gaugework/expr/rational_function.hpp"

namespace gaugework::expr {

/// Parses the expression grammar
///
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := atom ('^' nonneg-integer)?
///   atom   := integer | identifier | '(' expr ')' | '-' factor
///
/// When `allowed` is given, every identifier must name one of its symbols.
/// Throws ParseError carrying the offending character offset.
RationalFunction parse_expr(std::string_view text, const std::optional<std::set<Symbol>>& allowed = std::nullopt);

}  // namespace gaugework::expr
