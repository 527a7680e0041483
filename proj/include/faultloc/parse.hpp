#ifndef FAULTLOC_PARSE_HPP
#define FAULTLOC_PARSE_HPP

#include <string>
#include <string_view>

#include "faultloc/ast.hpp"

namespace faultloc {

// MiniLang grammar:
//
//   program   := "input" identlist? ";" "output" identlist? ";" stmt*
//   identlist := ident ("," ident)*
//   stmt      := ident ":=" expr ";"
//              | "if" "(" expr ")" block ("else" block)?
//              | "while" "(" expr ")" block
//   block     := "{" stmt* "}"
//   expr      := C-style precedence over
//                  or | and | == != | < <= > >= | + - | * / | "not" | primary
//   primary   := INT | "-" INT | ident | "(" expr ")"
//
// "#" starts a line comment. Identifiers may contain dots between parts
// (name.first). Statement ids are assigned 1..n in textual order.

/// Parse and statically check a program. Throws ParseError / SemanticError.
Program parse(std::string_view text);

/// Static checks alone: duplicate declarations, definite assignment of every
/// read (all-paths, conservative), outputs defined on all paths.
/// Used directly by the mutation harness to validate candidate mutants.
void checkProgram(const Program& p);

/// checkProgram, reporting failure as a bool instead of an exception.
bool isWellFormed(const Program& p);

} // namespace faultloc

#endif
