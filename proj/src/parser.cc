#include "fsrw/parser.h"

#include <cctype>
#include <set>
#include <utility>

#include "fsrw/error.h"

namespace fsrw {

namespace {

enum class Tok { kIdent, kQuoted, kPunct, kHash, kEnd };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

bool is_word_byte(char c) {
  const auto u = static_cast<unsigned char>(c);
  return std::isalnum(u) || c == '_' || u >= 0x80;
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  size_t i = 0;
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '%') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    const int tl = line;
    const int tc = col;
    if (c == '\'') {
      std::string text;
      advance(1);
      bool closed = false;
      while (i < src.size()) {
        char d = src[i];
        if (d == '\\') {
          if (i + 1 >= src.size()) break;
          text += src[i + 1];
          advance(2);
          continue;
        }
        if (d == '\'') {
          closed = true;
          advance(1);
          break;
        }
        if (d == '\n') break;
        text += d;
        advance(1);
      }
      if (!closed) throw SyntaxError("unterminated quoted symbol", tl, tc);
      if (text.empty()) throw SyntaxError("empty quoted symbol", tl, tc);
      out.push_back({Tok::kQuoted, std::move(text), tl, tc});
      continue;
    }
    if (c == '$' && i + 1 < src.size() && src[i + 1] == '$') {
      out.push_back({Tok::kIdent, "$$", tl, tc});
      advance(2);
      continue;
    }
    if (c == '#') {
      out.push_back({Tok::kHash, "#", tl, tc});
      advance(1);
      continue;
    }
    if (std::string_view("[]{}(),.*+^~$-&:?").find(c) != std::string_view::npos) {
      out.push_back({Tok::kPunct, std::string(1, c), tl, tc});
      advance(1);
      continue;
    }
    if (is_word_byte(c)) {
      size_t j = i;
      while (j < src.size() && is_word_byte(src[j])) ++j;
      out.push_back({Tok::kIdent, std::string(src.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", tl, tc);
  }
  out.push_back({Tok::kEnd, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  RuleProgram program() {
    RuleProgram prog;
    bool has_main = false;
    std::set<std::pair<std::string, size_t>> defined;
    while (peek().kind != Tok::kEnd) {
      if (peek().kind == Tok::kHash) {
        directive(prog);
      } else if (is_ident("macro") && is_punct("(", 1)) {
        MacroDef def = macro_clause();
        auto key = std::make_pair(def.name, def.params.size());
        if (!defined.insert(key).second) {
          throw SyntaxError("duplicate macro " + def.name + "/" +
                                std::to_string(def.params.size()),
                            def.line, 1);
        }
        prog.macros.push_back(std::move(def));
      } else {
        const Token& start = peek();
        if (has_main) {
          throw SyntaxError("more than one main expression", start.line,
                            start.column);
        }
        prog.main = expr();
        has_main = true;
        if (!accept_punct(".") && peek().kind != Tok::kEnd) {
          fail("expected '.' after main expression");
        }
      }
    }
    if (!has_main) {
      throw SyntaxError("no main expression", peek().line, peek().column);
    }
    return prog;
  }

  Regex single() {
    Regex r = expr();
    if (peek().kind != Tok::kEnd) fail("unexpected trailing input");
    return r;
  }

 private:
  const Token& peek(size_t k = 0) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  Token take() {
    Token t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  bool is_punct(std::string_view p, size_t k = 0) const {
    return peek(k).kind == Tok::kPunct && peek(k).text == p;
  }
  bool is_ident(std::string_view name, size_t k = 0) const {
    return peek(k).kind == Tok::kIdent && peek(k).text == name;
  }
  // 'o' / 'x' act as operators only when an operand follows.
  bool is_infix(std::string_view name) const {
    if (!is_ident(name)) return false;
    const Token& next = peek(1);
    if (next.kind == Tok::kIdent || next.kind == Tok::kQuoted) return true;
    return next.kind == Tok::kPunct &&
           std::string_view("[{(?~$").find(next.text[0]) != std::string_view::npos;
  }
  bool accept_punct(std::string_view p) {
    if (!is_punct(p)) return false;
    take();
    return true;
  }
  [[noreturn]] void fail(const std::string& message) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::kEnd ? "end of input" : "'" + t.text + "'";
    throw SyntaxError(message + ", found " + found, t.line, t.column);
  }
  void expect_punct(std::string_view p) {
    if (!accept_punct(p)) fail("expected '" + std::string(p) + "'");
  }
  void expect_close(std::string_view p, const Token& open) {
    if (!accept_punct(p)) {
      fail("expected '" + std::string(p) + "' to close '" + open.text +
           "' opened at " + std::to_string(open.line) + ":" +
           std::to_string(open.column) + " (unbalanced brackets)");
    }
  }

  void directive(RuleProgram& prog) {
    take();  // '#'
    if (!is_ident("alphabet")) fail("unknown directive");
    take();
    while (!is_punct(".")) {
      const Token& t = peek();
      if (t.kind != Tok::kIdent && t.kind != Tok::kQuoted) {
        fail("expected a symbol in #alphabet");
      }
      prog.alphabet.push_back(take().text);
    }
    take();
  }

  MacroDef macro_clause() {
    MacroDef def;
    def.line = take().line;  // 'macro'
    expect_punct("(");
    if (peek().kind != Tok::kIdent) fail("expected macro name");
    def.name = take().text;
    if (accept_punct("(")) {
      std::set<std::string> seen;
      do {
        if (peek().kind != Tok::kIdent) fail("expected parameter name");
        const Token p = take();
        if (!seen.insert(p.text).second) {
          throw SyntaxError("repeated parameter " + p.text, p.line, p.column);
        }
        def.params.push_back(p.text);
      } while (accept_punct(","));
      expect_punct(")");
    }
    expect_punct(",");
    def.body = expr();
    expect_punct(")");
    expect_punct(".");
    return def;
  }

  Regex positioned(Regex r, const Token& at) {
    r.line = at.line;
    r.column = at.column;
    return r;
  }

  Regex binary(NodeKind kind, Regex lhs, Regex rhs, const Token& at) {
    return positioned(Regex::node(kind, {std::move(lhs), std::move(rhs)}), at);
  }

  Regex expr() { return compose(); }

  Regex compose() {
    Regex lhs = boolean();
    while (is_infix("o")) {
      Token op = take();
      lhs = binary(NodeKind::kCompose, std::move(lhs), boolean(), op);
    }
    return lhs;
  }

  Regex boolean() {
    Regex lhs = cross();
    while (is_punct("-") || is_punct("&")) {
      Token op = take();
      NodeKind kind = op.text == "-" ? NodeKind::kDiff : NodeKind::kIntersect;
      lhs = binary(kind, std::move(lhs), cross(), op);
    }
    return lhs;
  }

  Regex cross() {
    Regex lhs = pair();
    while (is_infix("x")) {
      Token op = take();
      lhs = binary(NodeKind::kCross, std::move(lhs), pair(), op);
    }
    return lhs;
  }

  Regex pair() {
    Regex lhs = prefix();
    while (is_punct(":")) {
      Token op = take();
      lhs = binary(NodeKind::kPair, std::move(lhs), prefix(), op);
    }
    return lhs;
  }

  Regex prefix() {
    if (is_punct("~") || is_punct("$")) {
      Token op = take();
      NodeKind kind = op.text == "~" ? NodeKind::kComplement : NodeKind::kContain;
      return positioned(Regex::node(kind, {prefix()}), op);
    }
    return postfix();
  }

  Regex postfix() {
    Regex r = atom();
    while (is_punct("*") || is_punct("+") || is_punct("^")) {
      Token op = take();
      NodeKind kind = op.text == "*"   ? NodeKind::kStar
                      : op.text == "+" ? NodeKind::kPlus
                                       : NodeKind::kOption;
      r = positioned(Regex::node(kind, {std::move(r)}), op);
    }
    return r;
  }

  std::vector<Regex> list_until(std::string_view close, const Token& open) {
    std::vector<Regex> items;
    if (accept_punct(close)) return items;
    do {
      items.push_back(expr());
    } while (accept_punct(","));
    expect_close(close, open);
    return items;
  }

  Regex atom() {
    const Token t = peek();
    if (t.kind == Tok::kPunct) {
      if (t.text == "[") {
        take();
        auto items = list_until("]", t);
        if (items.empty()) return positioned(Regex::leaf(NodeKind::kEmptyString), t);
        return positioned(Regex::node(NodeKind::kSeq, std::move(items)), t);
      }
      if (t.text == "{") {
        take();
        auto items = list_until("}", t);
        if (items.empty()) return positioned(Regex::leaf(NodeKind::kEmptyLang), t);
        return positioned(Regex::node(NodeKind::kUnion, std::move(items)), t);
      }
      if (t.text == "(") {
        take();
        Regex inner = expr();
        expect_close(")", t);
        return inner;
      }
      if (t.text == "?") {
        take();
        return positioned(Regex::leaf(NodeKind::kAny), t);
      }
      fail("expected an expression");
    }
    if (t.kind == Tok::kQuoted) {
      take();
      return positioned(Regex::literal(t.text, true), t);
    }
    if (t.kind == Tok::kIdent) {
      take();
      if (is_punct("(")) return call(t);
      return positioned(Regex::literal(t.text, false), t);
    }
    fail("expected an expression");
  }

  Regex call(const Token& name) {
    const Token open = take();  // '('
    if (name.text == "match_n") return match_n(name, open);
    std::vector<Regex> args = list_until(")", open);
    auto need = [&](size_t n) {
      if (args.size() != n) {
        throw SyntaxError(name.text + " takes " + std::to_string(n) +
                              " argument(s), got " + std::to_string(args.size()),
                          name.line, name.column);
      }
    };
    const std::string& n = name.text;
    Regex r;
    if (n == "domain" || n == "range" || n == "identity" || n == "inverse") {
      need(1);
      NodeKind kind = n == "domain"     ? NodeKind::kDomain
                      : n == "range"    ? NodeKind::kRange
                      : n == "identity" ? NodeKind::kIdentity
                                        : NodeKind::kInverse;
      r = Regex::node(kind, std::move(args));
    } else if (n == "replace") {
      need(3);
      r = Regex::node(NodeKind::kReplace, std::move(args));
    } else if (n == "lm_concat") {
      need(1);
      Regex& list = args[0];
      if (list.kind == NodeKind::kEmptyString) {
        r = Regex::node(NodeKind::kLmConcat, {});
      } else if (list.kind == NodeKind::kSeq) {
        r = Regex::node(NodeKind::kLmConcat, std::move(list.children));
      } else {
        throw SyntaxError("lm_concat expects a bracketed list [T1,...,Tn]",
                          name.line, name.column);
      }
    } else {
      r = Regex::call(n, std::move(args));
    }
    return positioned(std::move(r), name);
  }

  Regex match_n(const Token& name, const Token& open) {
    bool negative = accept_punct("-");
    const Token num = peek();
    if (num.kind != Tok::kIdent ||
        num.text.find_first_not_of("0123456789") != std::string::npos) {
      fail("match_n expects a repetition count");
    }
    take();
    int64_t count = 0;
    try {
      count = std::stoll(num.text);
    } catch (const std::out_of_range&) {
      throw SyntaxError("repetition count too large", num.line, num.column);
    }
    if (negative) count = -count;
    expect_punct(",");
    Regex body = expr();
    expect_close(")", open);
    return positioned(Regex::repeat(std::move(body), count), name);
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
};

}  // namespace

RuleProgram parse_program(std::string_view text) {
  return Parser(text).program();
}

Regex parse_expression(std::string_view text) { return Parser(text).single(); }

}  // namespace fsrw
