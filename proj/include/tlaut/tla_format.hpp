#pragma once

#include <string>
#include <string_view>

#include "tlaut/automaton.hpp"

namespace tlaut {

// TLA format v1. Line oriented; `#` starts a comment; tokens are separated by
// whitespace. Directives:
//
//   @type (NFAwtl|DFAwtl|nrNFAwtl|nrDFAwtl)     first non-comment line
//   @alphabet <letter> ...
//   @states <state> ...
//   @initial <state> ...
//   @final <state> ...                          returning kinds only (required there)
//   @translucent <state> = [<letter> ...]
//   @delta <state> <letter> -> <state> ...
//   @delta <state> END -> (ACCEPT | <state> ...) non-returning kinds only
//
// Parsing checks syntax and name resolution only; structural rules such as the
// translucency constraint are left to `validate`.

/// Throws ParseError on malformed text.
Automaton parse_tla(std::string_view text);

/// Canonical text: translucency lines in state order, then transitions in
/// state order and letter order, with the END line last for each state.
/// Throws Error(InvalidAutomaton) if `validate(aut)` is not empty.
std::string serialize_tla(const Automaton& aut);

/// Reads and parses a file; throws Error(Io) if it cannot be read.
Automaton load_tla_file(const std::string& path);

std::string read_text_file(const std::string& path);

}  // namespace tlaut
