#include <gtest/gtest.h>

#include "fsrw/error.h"
#include "fsrw/optimize.h"
#include "fsrw/text_io.h"
#include "test_support.h"

namespace fsrw {
namespace {

using testing::abc_table;
using testing::expr;
using testing::outs;

using Strings = std::vector<std::string>;

Regex lit(const char* g) { return Regex::literal(g); }

TEST(Parser, MacroClauseWithUnion) {
  RuleProgram p = parse_program("macro(vowel,{a,e,i,o,u}).\nvowel.");
  ASSERT_EQ(p.macros.size(), 1u);
  const MacroDef& m = p.macros[0];
  EXPECT_EQ(m.name, "vowel");
  EXPECT_TRUE(m.params.empty());
  EXPECT_EQ(m.body.kind, NodeKind::kUnion);
  ASSERT_EQ(m.body.children.size(), 5u);
  EXPECT_EQ(m.body.children[3], lit("o"));
}

TEST(Parser, EmptyStringAndEmptyLanguage) {
  EXPECT_EQ(parse_expression("[]").kind, NodeKind::kEmptyString);
  EXPECT_EQ(parse_expression("{}").kind, NodeKind::kEmptyLang);
}

TEST(Parser, PairBindsTighterThanCompose) {
  Regex want = Regex::node(NodeKind::kCompose,
                           {Regex::node(NodeKind::kPair, {lit("a"), lit("b")}), lit("c")});
  EXPECT_EQ(parse_expression("a:b o c"), want);
}

TEST(Parser, Precedence) {
  // postfix > prefix > ':' > 'x' > '-' '&' > 'o'
  EXPECT_EQ(parse_expression("~a*"),
            Regex::node(NodeKind::kComplement, {Regex::node(NodeKind::kStar, {lit("a")})}));
  EXPECT_EQ(parse_expression("a:b x c"),
            Regex::node(NodeKind::kCross,
                        {Regex::node(NodeKind::kPair, {lit("a"), lit("b")}), lit("c")}));
  EXPECT_EQ(parse_expression("a x b - c"),
            Regex::node(NodeKind::kDiff,
                        {Regex::node(NodeKind::kCross, {lit("a"), lit("b")}), lit("c")}));
  EXPECT_EQ(parse_expression("a - b & c"),
            Regex::node(NodeKind::kIntersect,
                        {Regex::node(NodeKind::kDiff, {lit("a"), lit("b")}), lit("c")}));
  EXPECT_EQ(parse_expression("a & b o c"),
            Regex::node(NodeKind::kCompose,
                        {Regex::node(NodeKind::kIntersect, {lit("a"), lit("b")}), lit("c")}));
}

TEST(Parser, OAndXAsSymbols) {
  Regex u = parse_expression("{a,o,x}");
  ASSERT_EQ(u.children.size(), 3u);
  EXPECT_EQ(u.children[1], lit("o"));
  EXPECT_EQ(parse_expression("[o x x]"),
            Regex::node(NodeKind::kSeq, {Regex::node(NodeKind::kCross, {lit("o"), lit("x")})}));
}

TEST(Parser, QuotedGlyphs) {
  Regex r = parse_expression("['<abbr>', 'a b', '\\'']");
  ASSERT_EQ(r.kind, NodeKind::kSeq);
  EXPECT_EQ(r.children[0].text, "<abbr>");
  EXPECT_TRUE(r.children[0].quoted);
  EXPECT_EQ(r.children[2].text, "'");
}

TEST(Parser, ProgramPieces) {
  RuleProgram p = parse_program(
      "% comment\n#alphabet a b 'c d'.\n"
      "macro(twice(X), [X,X]).\n"
      "twice(a)");
  EXPECT_EQ(p.alphabet, (Strings{"a", "b", "c d"}));
  ASSERT_EQ(p.macros.size(), 1u);
  EXPECT_EQ(p.macros[0].params, Strings{"X"});
  EXPECT_EQ(p.main.kind, NodeKind::kMacroCall);
}

TEST(Parser, CallsAndRepeat) {
  EXPECT_EQ(parse_expression("match_n(3, a)").kind, NodeKind::kRepeatN);
  EXPECT_EQ(parse_expression("match_n(3, a)").count, 3);
  EXPECT_EQ(parse_expression("replace(a:b, [], [])").kind, NodeKind::kReplace);
  EXPECT_EQ(parse_expression("lm_concat([a, b])").kind, NodeKind::kLmConcat);
  EXPECT_EQ(parse_expression("domain(a:b)").kind, NodeKind::kDomain);
  EXPECT_EQ(parse_expression("$$(lb1)").kind, NodeKind::kMacroCall);
}

void expect_syntax_error(std::string_view text, int line, int column,
                         std::string_view fragment) {
  try {
    parse_program(text);
    ADD_FAILURE() << "no error for: " << text;
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
  }
}

TEST(Parser, SyntaxErrorsCarryPositions) {
  expect_syntax_error("[a,b", 1, 5, "[");
  expect_syntax_error("a.\nb.", 2, 1, "more than one main expression");
  expect_syntax_error("", 1, 1, "no main expression");
  expect_syntax_error("macro(m,a).\nmacro(m,b).\nm.", 2, 1, "m");
  expect_syntax_error("a:", 1, 3, "");
  expect_syntax_error("\n  {a,b]", 2, 7, "{");
  expect_syntax_error("''", 1, 1, "");
}

TEST(Parser, SameNameDifferentArityIsFine) {
  RuleProgram p = parse_program("macro(m,a). macro(m(X),X). m(m).");
  EXPECT_EQ(p.macros.size(), 2u);
}

// Random ASTs, depth <= 5.
Regex random_ast(std::mt19937_64& rng, int depth) {
  static const char* kGlyphs[] = {"a", "b", "c1", "_z", "<1", "a b", "'", "o", "x", "\\"};
  auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
  if (depth == 0 || pick(4) == 0) {
    switch (pick(5)) {
      case 0: return Regex::leaf(NodeKind::kEmptyString);
      case 1: return Regex::leaf(NodeKind::kEmptyLang);
      case 2: return Regex::leaf(NodeKind::kAny);
      default: {
        std::string g = kGlyphs[pick(10)];
        bool quoted = pick(2) == 0 || g == "o" || g == "x" ||
                      !std::all_of(g.begin(), g.end(), [](char ch) {
                        return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
                      });
        return Regex::literal(g, quoted);
      }
    }
  }
  auto sub = [&] { return random_ast(rng, depth - 1); };
  switch (pick(17)) {
    case 0: case 1: {
      std::vector<Regex> ch;
      for (int i = pick(4); i >= 0; --i) ch.push_back(sub());
      return Regex::node(pick(2) ? NodeKind::kSeq : NodeKind::kUnion, std::move(ch));
    }
    case 2: return Regex::node(NodeKind::kStar, {sub()});
    case 3: return Regex::node(NodeKind::kPlus, {sub()});
    case 4: return Regex::node(NodeKind::kOption, {sub()});
    case 5: return Regex::node(NodeKind::kComplement, {sub()});
    case 6: return Regex::node(NodeKind::kContain, {sub()});
    case 7: return Regex::node(NodeKind::kDiff, {sub(), sub()});
    case 8: return Regex::node(NodeKind::kIntersect, {sub(), sub()});
    case 9: return Regex::node(NodeKind::kPair, {sub(), sub()});
    case 10: return Regex::node(NodeKind::kCross, {sub(), sub()});
    case 11: return Regex::node(NodeKind::kCompose, {sub(), sub()});
    case 12: return Regex::node(pick(2) ? NodeKind::kDomain : NodeKind::kInverse, {sub()});
    case 13: return Regex::node(NodeKind::kReplace, {sub(), sub(), sub()});
    case 14: {
      std::vector<Regex> parts;
      for (int i = pick(3); i >= 0; --i) parts.push_back(sub());
      return Regex::node(NodeKind::kLmConcat, {Regex::node(NodeKind::kSeq, std::move(parts))});
    }
    case 15: return Regex::repeat(sub(), pick(5));
    default: {
      std::vector<Regex> args;
      for (int i = pick(3); i >= 0; --i) args.push_back(sub());
      return Regex::call(pick(2) ? "twice" : "ign", std::move(args));
    }
  }
}

TEST(Parser, RoundTripRandomAsts) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 2000; ++i) {
    Regex r = random_ast(rng, 5);
    std::string src = to_source(r);
    Regex back;
    ASSERT_NO_THROW(back = parse_expression(src)) << src;
    ASSERT_EQ(back, r) << src;
  }
}

TEST(Macros, MatchN) {
  auto t = abc_table();
  EXPECT_TRUE(equivalent(expr(t, "match_n(0, a)"), expr(t, "[]")));
  EXPECT_TRUE(equivalent(expr(t, "match_n(3, a)"), expr(t, "[a,a,a]")));
  RuleProgram p = parse_program("match_n(3, a).");
  EXPECT_EQ(expand_macros(p), parse_expression("[a,a,a]"));
}

TEST(Macros, LenientComposition) {
  auto t = abc_table({"z"});
  Fst m = expr(t, "lenient_composition(a:b, b:c)");
  EXPECT_EQ(outs(m, "a"), Strings{"c"});
  EXPECT_TRUE(outs(m, "z").empty());
  // Falls back to R where R o C is undefined.
  Fst f = expr(t, "lenient_composition({a:b, z:a}, b:c)");
  EXPECT_EQ(outs(f, "a"), Strings{"c"});
  EXPECT_EQ(outs(f, "z"), Strings{"a"});
}

TEST(Macros, PriorityUnion) {
  auto t = abc_table();
  Fst m = expr(t, "priority_union(a:b, {a:c, b:c})");
  EXPECT_EQ(outs(m, "a"), Strings{"b"});
  EXPECT_EQ(outs(m, "b"), Strings{"c"});
}

TEST(Macros, ExpansionIsSyntactic) {
  CompiledProgram a = compile_source(
      "macro(vowel,{a,e,i,o,u}). macro(twice(X),[X,X]). twice(vowel) o twice(vowel:b).");
  CompiledProgram b = compile_source(
      "[{a,e,i,o,u},{a,e,i,o,u}] o [{a,e,i,o,u}:b,{a,e,i,o,u}:b].");
  EXPECT_EQ(dump_string(a.machine), dump_string(b.machine));
}

TEST(Macros, Hygiene) {
  // The argument X of the caller is not captured by the callee's X.
  RuleProgram p = parse_program(
      "macro(outer(X), [X, inner(b)]). macro(inner(X), {X, c}). outer(X).");
  EXPECT_EQ(expand_macros(p), parse_expression("[X, {b, c}]"));
}

TEST(Macros, Errors) {
  auto expect_error = [](std::string_view text, std::string_view fragment) {
    try {
      expand_macros(parse_program(text));
      ADD_FAILURE() << "no error for: " << text;
    } catch (const MacroError& e) {
      EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
    }
  };
  expect_error("match_n(-1, a).", "negative");
  expect_error("match_n(10001, a).", "10000");
  expect_error("macro(loop(X), loop(X)). loop(a).", "recursive");
  expect_error("macro(p(X), q(X)). macro(q(X), p(X)). p(a).", "recursive");
  expect_error("nosuch(a).", "unknown");
  expect_error("macro(one(X), X). one(a, b).", "defined with 1");
  expect_error("macro(sig, a). sig.", "builtin");
}

TEST(Macros, DepthLimit) {
  std::string src;
  for (int i = 0; i < 10; ++i) {
    src += "macro(m" + std::to_string(i) + "(X), m" + std::to_string(i + 1) + "([X])). ";
  }
  src += "macro(m10(X), X). m0(a).";
  RuleProgram p = parse_program(src);
  EXPECT_NO_THROW(expand_macros(p, stdlib_macros(), 20));
  EXPECT_THROW(expand_macros(p, stdlib_macros(), 5), MacroError);
}

// One expression per operator row of the calculus.
TEST(Compiler, OperatorCorpus) {
  const char* corpus[] = {
      "[]", "{}", "a", "'a'", "?", "[a,b,c]", "{a,b}", "a*", "a+", "a^",
      "~a", "{a,b} - a", "$a", "{a,b} & a", "a:b", "a* x b", "a:b o b:c",
      "domain(a:b)", "range(a:b)", "identity(a)", "inverse(a:b)",
      "match_n(2, a)", "replace(a:b, c, [])", "lm_concat([a*, a:b])",
      "priority_union(a:b, b:c)", "lenient_composition(a:b, b:c)",
      "sig", "xsig", "not(lb1)", "$$(lb1)", "intro(rb2)", "ign(sig, b2)",
      "if_p_then_s(sig, sig)", "l_iff_r(lb2, rb2)", "true", "false",
      "coerce_to_boolean(a)", "if(a, a:b, b:a)", "non_markers",
  };
  for (const char* src : corpus) {
    auto t = abc_table();
    EXPECT_NO_THROW(expr(t, src)) << src;
  }
}

TEST(Compiler, SmallExamples) {
  auto t = abc_table();
  EXPECT_TRUE(accepts(expr(t, "a"), testing::w(t, "a")));
  Fst all = expr(t, "~{}");
  for (const Word& s : all_words(t->symbols(), 3)) EXPECT_TRUE(accepts(all, s));
}

TEST(Compiler, WorkedExampleProgram) {
  CompiledProgram p = compile_source(
      "lm_concat([[{[t,o],[t,o,p]}, []:'#'], [{o,[p,o,l,o]}, []:'#'],"
      " {[g,i,c,a,l],[o^,l,o,g,i,c,a,l]}]).");
  EXPECT_EQ(outs(p.machine, "topological"), Strings{"top#o#logical"});
  EXPECT_TRUE(outs(p.machine, "polotopogical").empty());
}

TEST(Compiler, CoercionErrors) {
  auto t = abc_table();
  EXPECT_THROW(expr(t, "~(a:b)"), CoercionError);
  EXPECT_THROW(expr(t, "replace(a:b, c:a, [])"), CoercionError);
}

TEST(Compiler, EmptyDomainWarns) {
  CompiledProgram p = compile_source("replace({}:b, [], []).");
  EXPECT_FALSE(p.warnings.empty());
  EXPECT_EQ(outs(p.machine, "b"), Strings{"b"});
}

TEST(Compiler, AlphabetDirectiveWidensAny) {
  CompiledProgram p = compile_source("#alphabet z. ?*.");
  EXPECT_EQ(outs(p.machine, "z"), Strings{"z"});
}

TEST(Compiler, CascadeMatchesComposed) {
  const char* src = "replace(a:b, c, []) o replace(b:c, [], a).";
  CompiledProgram whole = compile_source(src);
  CompiledCascade parts = compile_cascade(src);
  EXPECT_EQ(parts.factors.size(), 18u);
  for (const char* s : {"", "ca", "cab", "acaab", "cbcaa"}) {
    Word in = tokenize(*parts.symbols, s);
    EXPECT_EQ(render_all(*parts.symbols, transduce_cascade(parts.factors, in)),
              outs(whole.machine, s))
        << s;
  }
}

}  // namespace
}  // namespace fsrw
