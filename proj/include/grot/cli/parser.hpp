#pragma once

#include <string_view>

#include "grot/virtual_rep.hpp"

namespace grot::cli {

// Side and basis for expressions that do not determine them ("0", "Std()").
struct ParseDefaults {
  Side side = Side::F;
  Basis basis = Basis::Standard;
};

// expr := ['-'] term (('+'|'-') term)*  |  '0'
// term := [int '*'] atom
// atom := 'Std(' [ms] ')' | 'Irr(' [ms] ')'
// ms   := seg (',' seg)*
// seg  := ident '[' int '..' int ']'       F side, inclusive exponents
//       | ident "'" '{' int ';' int '}'    D side, start;length
// Whitespace is ignored between tokens. Throws ParseError (with the byte
// offset) on syntax errors, mixed sides or mixed bases, and ContextError or
// DomainError for unknown families and invalid segments.
VirtualRep parse_expr(std::string_view text, const AlgebraContext& ctx, ParseDefaults defaults = {});

}  // namespace grot::cli
