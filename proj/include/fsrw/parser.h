#ifndef FSRW_PARSER_H_
#define FSRW_PARSER_H_

#include <string_view>

#include "fsrw/regex_ast.h"

namespace fsrw {

// Rule files:
//
//   % comment to end of line
//   #alphabet a b 'c d'.          declares Sigma_user symbols
//   macro(vowel, {a,e,i,o,u}).    nullary macro
//   macro(twice(X), [X,X]).       parameterized macro
//   replace(vowel:'V', [], []).   the one main expression ('.' optional at EOF)
//
// Precedence, tightest first: postfix * + ^; prefix ~ $; ':'; 'x'; '-' '&';
// 'o'; ',' inside brackets. Binary operators associate to the left. Bare
// words of letters, digits and '_' are symbols (or nullary macros); 'o' and
// 'x' are operators only between two operands. Throws SyntaxError.
RuleProgram parse_program(std::string_view text);

// A single expression (no trailing '.').
Regex parse_expression(std::string_view text);

}  // namespace fsrw

#endif  // FSRW_PARSER_H_
