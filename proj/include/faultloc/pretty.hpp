#ifndef FAULTLOC_PRETTY_HPP
#define FAULTLOC_PRETTY_HPP

#include <string>

#include "faultloc/ast.hpp"

namespace faultloc {

/// Canonical source text; parse(pretty(p)) is structurally equal to p.
std::string pretty(const Program& p);

/// One statement (with nested blocks), at the given indent depth.
std::string pretty(const Stmt& s, int indent = 0);

/// Expression with minimal parentheses.
std::string pretty(const Expr& e);

/// Display label for statement ids in reports: 1 -> "I", 4 -> "IV".
std::string romanNumeral(int n);

} // namespace faultloc

#endif
