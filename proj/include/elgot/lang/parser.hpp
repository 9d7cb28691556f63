#pragma once

#include <string>

#include "elgot/lang/ast.hpp"

namespace elgot::lang {

/// Parses a full program per the grammar: `var` declarations first, then a
/// statement sequence. Statements are separated by ';' (a trailing ';' is
/// tolerated and a declaration-only file is the empty program). Type-checks
/// against the declarations while parsing.
///
/// Throws SyntaxError (with line/column), UndeclaredVariable, TypeError.
Program parse(const std::string& text);

}  // namespace elgot::lang
