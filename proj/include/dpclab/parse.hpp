#pragma once

#include <set>
#include <string>
#include <string_view>

#include "dpclab/trs.hpp"

namespace dpclab {

// TRS text format:
//   file := decl*
//   decl := "(VAR" ident* ")" | "(RULES" rule* ")" | "(COMMENT" ... ")"
//   rule := term "->" term
//   term := ident | ident "(" term ("," term)* ")"
// Identifiers are drawn from [A-Za-z0-9_+'∘-] (any non-ASCII byte is accepted
// as an identifier byte); '#' is reserved for internally generated symbols.
// Identifiers declared under VAR are variables, all others function symbols.
Trs parse_trs(std::string_view text);

std::string print_trs(const Trs& trs);

// A single term in the same grammar; identifiers in `vars` parse as variables.
Term parse_term(std::string_view text, const std::set<std::string>& vars = {});

}  // namespace dpclab
