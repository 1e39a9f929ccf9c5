#ifndef FSRW_REGEX_AST_H_
#define FSRW_REGEX_AST_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fsrw {

enum class NodeKind {
  kEmptyString,  // []
  kEmptyLang,    // {}
  kLiteral,      // a  'any glyph'
  kAny,          // ?
  kSeq,          // [E1,...,En]
  kUnion,        // {E1,...,En}
  kStar,         // E*
  kPlus,         // E+
  kOption,       // E^
  kComplement,   // ~E
  kDiff,         // E1 - E2
  kContain,      // $E
  kIntersect,    // E1 & E2
  kPair,         // A:B
  kCross,        // E1 x E2
  kCompose,      // A o B
  kDomain,
  kRange,
  kIdentity,
  kInverse,
  kMacroCall,    // name(args) or a builtin after expansion
  kReplace,      // replace(T, Left, Right)
  kLmConcat,     // lm_concat([T1,...,Tn])
  kRepeatN,      // match_n(N, E)
};

const char* node_kind_name(NodeKind kind);

struct Regex {
  NodeKind kind = NodeKind::kEmptyString;
  std::string text;     // glyph of a literal, name of a macro call
  bool quoted = false;  // literal written as '...'; never a macro reference
  int64_t count = 0;    // repetitions of kRepeatN
  std::vector<Regex> children;
  int line = 0;  // source position, not part of equality
  int column = 0;

  static Regex leaf(NodeKind kind) {
    Regex r;
    r.kind = kind;
    return r;
  }
  static Regex literal(std::string glyph, bool quoted = false);
  static Regex node(NodeKind kind, std::vector<Regex> children);
  static Regex call(std::string name, std::vector<Regex> args);
  static Regex repeat(Regex child, int64_t count);

  friend bool operator==(const Regex& a, const Regex& b);
};

// Source text that parses back to an equal tree.
std::string to_source(const Regex& r);

struct MacroDef {
  std::string name;
  std::vector<std::string> params;
  Regex body;
  int line = 0;
};

struct RuleProgram {
  // Explicit Sigma_user from `#alphabet` directives (may be empty).
  std::vector<std::string> alphabet;
  std::vector<MacroDef> macros;
  Regex main;
};

}  // namespace fsrw

#endif  // FSRW_REGEX_AST_H_
