#include "fsrw/regex_ast.h"

#include <cctype>

namespace fsrw {

const char* node_kind_name(NodeKind kind) {
  switch (kind) {
    case NodeKind::kEmptyString: return "EmptyString";
    case NodeKind::kEmptyLang: return "EmptyLang";
    case NodeKind::kLiteral: return "Literal";
    case NodeKind::kAny: return "Any";
    case NodeKind::kSeq: return "Seq";
    case NodeKind::kUnion: return "Union";
    case NodeKind::kStar: return "Star";
    case NodeKind::kPlus: return "Plus";
    case NodeKind::kOption: return "Option";
    case NodeKind::kComplement: return "Complement";
    case NodeKind::kDiff: return "Diff";
    case NodeKind::kContain: return "Contain";
    case NodeKind::kIntersect: return "Intersect";
    case NodeKind::kPair: return "Pair";
    case NodeKind::kCross: return "Cross";
    case NodeKind::kCompose: return "Compose";
    case NodeKind::kDomain: return "Domain";
    case NodeKind::kRange: return "Range";
    case NodeKind::kIdentity: return "Identity";
    case NodeKind::kInverse: return "Inverse";
    case NodeKind::kMacroCall: return "MacroCall";
    case NodeKind::kReplace: return "Replace";
    case NodeKind::kLmConcat: return "LmConcat";
    case NodeKind::kRepeatN: return "RepeatN";
  }
  return "?";
}

Regex Regex::literal(std::string glyph, bool quoted) {
  Regex r = leaf(NodeKind::kLiteral);
  r.text = std::move(glyph);
  r.quoted = quoted;
  return r;
}

Regex Regex::node(NodeKind kind, std::vector<Regex> children) {
  Regex r = leaf(kind);
  r.children = std::move(children);
  return r;
}

Regex Regex::call(std::string name, std::vector<Regex> args) {
  Regex r = leaf(NodeKind::kMacroCall);
  r.text = std::move(name);
  r.children = std::move(args);
  return r;
}

Regex Regex::repeat(Regex child, int64_t count) {
  Regex r = leaf(NodeKind::kRepeatN);
  r.count = count;
  r.children.push_back(std::move(child));
  return r;
}

bool operator==(const Regex& a, const Regex& b) {
  return a.kind == b.kind && a.text == b.text && a.quoted == b.quoted &&
         a.count == b.count && a.children == b.children;
}

namespace {

bool is_bare(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    const auto u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && c != '_' && u < 0x80) return false;
  }
  return true;
}

std::string quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'' || c == '\\') out += '\\';
    out += c;
  }
  return out + "'";
}

// Nodes that print as a single operand needing no parentheses.
bool is_atomic(const Regex& r) {
  switch (r.kind) {
    case NodeKind::kDiff:
    case NodeKind::kIntersect:
    case NodeKind::kPair:
    case NodeKind::kCross:
    case NodeKind::kCompose:
    case NodeKind::kComplement:
    case NodeKind::kContain:
      return false;
    default:
      return true;
  }
}

void print(const Regex& r, std::string& out);

void print_list(const std::vector<Regex>& items, std::string& out) {
  for (size_t i = 0; i < items.size(); ++i) {
    if (i) out += ',';
    print(items[i], out);
  }
}

void print_operand(const Regex& r, std::string& out) {
  if (is_atomic(r)) {
    print(r, out);
  } else {
    out += '(';
    print(r, out);
    out += ')';
  }
}

void print_call(const char* name, const std::vector<Regex>& args,
                std::string& out) {
  out += name;
  out += '(';
  print_list(args, out);
  out += ')';
}

void print(const Regex& r, std::string& out) {
  switch (r.kind) {
    case NodeKind::kEmptyString: out += "[]"; return;
    case NodeKind::kEmptyLang: out += "{}"; return;
    case NodeKind::kLiteral:
      out += (!r.quoted && is_bare(r.text)) ? r.text : quote(r.text);
      return;
    case NodeKind::kAny: out += '?'; return;
    case NodeKind::kSeq:
      out += '[';
      print_list(r.children, out);
      out += ']';
      return;
    case NodeKind::kUnion:
      out += '{';
      print_list(r.children, out);
      out += '}';
      return;
    case NodeKind::kStar:
    case NodeKind::kPlus:
    case NodeKind::kOption:
      print_operand(r.children[0], out);
      out += r.kind == NodeKind::kStar ? '*' : r.kind == NodeKind::kPlus ? '+' : '^';
      return;
    case NodeKind::kComplement:
    case NodeKind::kContain:
      out += r.kind == NodeKind::kComplement ? '~' : '$';
      print_operand(r.children[0], out);
      return;
    case NodeKind::kDiff:
    case NodeKind::kIntersect:
    case NodeKind::kPair:
    case NodeKind::kCross:
    case NodeKind::kCompose: {
      const char* op = r.kind == NodeKind::kDiff        ? " - "
                       : r.kind == NodeKind::kIntersect ? " & "
                       : r.kind == NodeKind::kPair      ? ":"
                       : r.kind == NodeKind::kCross     ? " x "
                                                        : " o ";
      print_operand(r.children[0], out);
      out += op;
      print_operand(r.children[1], out);
      return;
    }
    case NodeKind::kDomain: print_call("domain", r.children, out); return;
    case NodeKind::kRange: print_call("range", r.children, out); return;
    case NodeKind::kIdentity: print_call("identity", r.children, out); return;
    case NodeKind::kInverse: print_call("inverse", r.children, out); return;
    case NodeKind::kReplace: print_call("replace", r.children, out); return;
    case NodeKind::kMacroCall: print_call(r.text.c_str(), r.children, out); return;
    case NodeKind::kLmConcat:
      out += "lm_concat([";
      print_list(r.children, out);
      out += "])";
      return;
    case NodeKind::kRepeatN:
      out += "match_n(" + std::to_string(r.count) + ",";
      print(r.children[0], out);
      out += ')';
      return;
  }
}

}  // namespace

std::string to_source(const Regex& r) {
  std::string out;
  print(r, out);
  return out;
}

}  // namespace fsrw
