#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "uag/signature.hpp"
#include "uag/term.hpp"

namespace uag {

/// Grammar:
///   term := var | const | op '(' term {',' term} ')' | term binop term | '(' term ')'
/// Binary symbols declared infix are left-associative; larger precedence binds
/// tighter. Errors are ParseError with 1-based columns; `line` is reported as given.
Term parse_term(std::string_view src, const Signature& sig, const VarSet& vars, std::size_t line = 1);

/// `term = term`
Equation parse_equation(std::string_view src, const Signature& sig, const VarSet& vars, std::size_t line = 1);

/// System file: a `vars x y ...` header line, then one equation per line.
/// `#` starts a comment; blank lines are ignored.
EquationSystem parse_system(std::string_view text, const Signature& sig);
EquationSystem load_system_file(const std::string& path, const Signature& sig);

}  // namespace uag
