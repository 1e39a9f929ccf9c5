#ifndef FSRW_MACRO_EXPANDER_H_
#define FSRW_MACRO_EXPANDER_H_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fsrw/regex_ast.h"

namespace fsrw {

// Macros visible to an expansion, keyed by (name, arity). Later
// definitions replace earlier ones.
class MacroEnv {
 public:
  void define(MacroDef def);
  const MacroDef* find(const std::string& name, size_t arity) const;
  std::vector<size_t> arities(const std::string& name) const;

 private:
  std::map<std::pair<std::string, size_t>, MacroDef> defs_;
};

// Operators implemented by the compiler rather than by a macro body:
// the marker toolkit and the replace steps. Empty if `name` is not one.
const std::vector<size_t>& builtin_arities(const std::string& name);
bool is_builtin(const std::string& name);

// priority_union(Q,R) and lenient_composition(R,C).
const MacroEnv& stdlib_macros();

constexpr int kDefaultExpansionDepth = 256;

// Fully expands `program.main`. The program's macros extend (and may
// override) `env`. Builtin references remain as kMacroCall nodes and
// match_n becomes a Seq (or [] for zero). Throws MacroError.
Regex expand_macros(const RuleProgram& program,
                    const MacroEnv& env = stdlib_macros(),
                    int max_depth = kDefaultExpansionDepth);

// Largest accepted match_n count.
constexpr int64_t kMaxRepetition = 10000;

}  // namespace fsrw

#endif  // FSRW_MACRO_EXPANDER_H_
