#ifndef FSRW_COMPILER_H_
#define FSRW_COMPILER_H_

#include <string>
#include <string_view>
#include <vector>

#include "fsrw/fst.h"
#include "fsrw/regex_ast.h"
#include "fsrw/replace.h"

namespace fsrw {

struct CompileOptions {
  LongestMatchForm longest_match = default_longest_match_form();
};

// Adds the glyph of every literal in `expanded` to the user alphabet.
void register_literals(const Regex& expanded, SymbolTable& symbols);

// Evaluates an expanded AST. Literals are registered first, so `?`
// covers every symbol the expression mentions. The result is canonical.
Fst compile_program(const Regex& expanded, const SymbolTablePtr& symbols,
                    const CompileOptions& options = {},
                    std::vector<std::string>* warnings = nullptr);

struct CompiledProgram {
  SymbolTablePtr symbols;
  Regex expanded;
  Fst machine;
  std::vector<std::string> warnings;
};

// parse_program + expand_macros + compile_program on a fresh table with
// the program's #alphabet declared.
CompiledProgram compile_source(std::string_view text,
                               const CompileOptions& options = {});

struct CompiledCascade {
  SymbolTablePtr symbols;
  std::vector<Fst> factors;  // apply left to right
  std::vector<std::string> warnings;
};

// Like compile_source but keeps the top-level `o` chain apart and splits
// every top-level replace into its nine steps.
CompiledCascade compile_cascade(std::string_view text,
                                const CompileOptions& options = {});

}  // namespace fsrw

#endif  // FSRW_COMPILER_H_
