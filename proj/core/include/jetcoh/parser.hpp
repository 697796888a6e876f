#pragma once

#include "jetcoh/expr_tree.hpp"

#include <string>
#include <string_view>

namespace jetcoh {

/// expr   := term (('+'|'-') term)*
/// term   := ['-'|'+'] factor ('*' factor)*
/// factor := atom ('^' ['-'] nat)*
/// atom   := rational | 'lam' | jet | 'hinv' | 'S' | 'det(' nat ',' nat ')' | '(' expr ')'
/// jet    := ('f'|'g'|'k'|'T'|'R'|'w'|'h') '[' nat ']'
/// Throws ParseError with the byte offset of the problem; OrderCapExceeded for
/// jet orders beyond the cap.
ExprNode parse_tree(std::string_view text, const JetLimits& limits = {});

DiffExpr parse_expr(std::string_view text, const JetLimits& limits = {});

/// Canonical text of e; parse_expr(print_expr(e)) == e.
std::string print_expr(const DiffExpr& e);

}  // namespace jetcoh
