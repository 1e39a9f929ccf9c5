#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "fsrw/markers.h"
#include "fsrw/optimize.h"
#include "fsrw/replace.h"
#include "fsrw/suite.h"
#include "fsrw/text_io.h"
#include "test_support.h"

namespace fsrw {
namespace {

using testing::abc_table;
using testing::expr;
using testing::outs;

using Strings = std::vector<std::string>;

Word enc(const SymbolTable& t, std::string_view cells) {
  Word out;
  std::istringstream is{std::string(cells)};
  std::string cell;
  while (is >> cell) {
    out.push_back(t.find(cell.substr(0, cell.size() - 1)));
    out.push_back(t.find(cell.substr(cell.size() - 1)));
  }
  return out;
}

std::string cells(const SymbolTable& t, const Word& x) {
  std::string s;
  for (size_t i = 0; i < x.size(); ++i) {
    if (i && i % 2 == 0) s += ' ';
    s += t.glyph(x[i]);
  }
  return s;
}

Strings enc_outs(const Fst& m, std::string_view input, size_t limit = 100) {
  const SymbolTable& t = *m.symbols();
  Strings r;
  for (const Word& x : transduce(m, enc(t, input), limit).outputs) r.push_back(cells(t, x));
  std::sort(r.begin(), r.end());
  return r;
}

bool contains(const Strings& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

struct Steps : ::testing::Test {
  SymbolTablePtr t = abc_table({"x"});
  MarkerAlphabet ctx{t};
  Fst e(const char* src) { return expr(t, src); }
};

TEST_F(Steps, RightContextMarks) {
  EXPECT_EQ(enc_outs(r_right(ctx, e("[]")), "a0 b0"), Strings{"2>1 a0 2>1 b0 2>1"});
  EXPECT_EQ(enc_outs(r_right(ctx, e("b")), "a0 b0"), Strings{"a0 2>1 b0"});
  EXPECT_EQ(enc_outs(r_right(ctx, e("c")), "a0 b0"), Strings{"a0 b0"});
}

TEST_F(Steps, CandidateStarts) {
  Fst f = f_phi(ctx, e("a"));
  EXPECT_EQ(enc_outs(f, "2>1 a0 2>1 b0 2>1"), Strings{"2>1 <21 a0 2>1 b0 2>1"});
  EXPECT_EQ(enc_outs(f_phi(ctx, e("c")), "2>1 a0 2>1"), Strings{"2>1 a0 2>1"});
  // With the empty string in Phi, an empty candidate sits before each rb2.
  EXPECT_EQ(enc_outs(f_phi(ctx, e("a^")), "2>1 b0 2>1"), Strings{"<21 2>1 b0 <21 2>1"});
  EXPECT_EQ(enc_outs(f_phi(ctx, e("a^")), "2>1 a0 2>1"),
            Strings{"<21 2>1 <21 a0 <21 2>1"});
}

TEST_F(Steps, LeftToRightSelections) {
  Fst l = left_to_right(ctx, e("a"));
  Strings one = enc_outs(l, "<21 a0 2>1");
  EXPECT_TRUE(contains(one, "<11 a0 1>1"));
  EXPECT_TRUE(contains(one, "<21 a0 2>1"));
  Strings two = enc_outs(l, "<21 a0 2>1 b0 <21 a0 2>1", 16);
  for (const char* s : {"<21 a0 2>1 b0 <21 a0 2>1", "<11 a0 1>1 b0 <21 a0 2>1",
                        "<21 a0 2>1 b0 <11 a0 1>1", "<11 a0 1>1 b0 <11 a0 1>1"}) {
    EXPECT_TRUE(contains(two, s)) << s;
  }
  Strings plain = enc_outs(l, "a0 b0");
  EXPECT_EQ(plain, Strings{"a0 b0"});
}

TEST_F(Steps, LongestMatchFiltersShortSelection) {
  for (auto form : {LongestMatchForm::kStandard, LongestMatchForm::kPrefixConstrained}) {
    Fst lm = longest_match(ctx, e("[a,b*]"), form);
    EXPECT_TRUE(enc_outs(lm, "<11 a0 1>1 b0 2>1 b0 2>1").empty());
    EXPECT_TRUE(enc_outs(lm, "<11 a0 b0 1>1 b0 2>1").empty());
    EXPECT_EQ(enc_outs(lm, "<11 a0 b0 b0 1>1"), Strings{"<11 a0 b0 b0 1>1"});
    // No lb1: just drops rb2.
    EXPECT_EQ(enc_outs(lm, "<21 a0 2>1 b0 2>1"), Strings{"<21 a0 b0"});
  }
}

TEST_F(Steps, LongestMatchFormsAgreeOnAbStar) {
  Fst phi = e("[a,b*]");
  Fst feed = compose_all({ctx.non_markers(), r_right(ctx, e("[]")), f_phi(ctx, phi),
                          left_to_right(ctx, phi)});
  Fst a = compose(feed, longest_match(ctx, phi, LongestMatchForm::kStandard));
  Fst b = compose(feed, longest_match(ctx, phi, LongestMatchForm::kPrefixConstrained));
  EXPECT_TRUE(equivalent(a, b));
  for (const Word& s : all_words(t->user_alphabet(), 5)) {
    EXPECT_EQ(transduce(a, s).outputs, transduce(b, s).outputs);
  }
}

TEST_F(Steps, AuxReplace) {
  EXPECT_EQ(enc_outs(aux_replace(ctx, e("a:b")), "<11 a0 1>1"), Strings{"<11 b0"});
  EXPECT_EQ(enc_outs(aux_replace(ctx, e("a:b")), "a0 <21 c0"), Strings{"a0 <21 c0"});
  EXPECT_EQ(enc_outs(aux_replace(ctx, e("[a,b*] x x")), "<11 a0 b0 b0 1>1"),
            Strings{"<11 x0"});
}

TEST_F(Steps, LeftContexts) {
  EXPECT_EQ(enc_outs(l1(ctx, e("c")), "c0 <11 b0"), Strings{"c0 b0"});
  EXPECT_TRUE(enc_outs(l1(ctx, e("c")), "a0 <11 b0").empty());
  EXPECT_EQ(enc_outs(l1(ctx, e("[]")), "a0 <11 b0 <21 c0"), Strings{"a0 b0 <21 c0"});
  EXPECT_TRUE(enc_outs(l2(ctx, e("c")), "c0 <21 a0").empty());
  EXPECT_EQ(enc_outs(l2(ctx, e("c")), "a0 <21 a0"), Strings{"a0 a0"});
}

TEST_F(Steps, NineFactors) {
  ReplaceRule rule{e("a:b"), e("[]"), e("[]")};
  auto factors = replace_factors(ctx, rule);
  ASSERT_EQ(factors.size(), 9u);
  EXPECT_EQ(render_all(*t, transduce_cascade(factors, testing::w(t, "aab"))),
            Strings{"bbb"});
}

TEST(Replace, Examples) {
  auto t = abc_table({"x"});
  EXPECT_EQ(outs(expr(t, "replace(a:b, [], [])"), "aab"), Strings{"bbb"});
  Fst ab = expr(t, "replace([a,b*] x x, [], [])");
  EXPECT_EQ(outs(ab, "abb"), Strings{"x"});
  EXPECT_EQ(outs(ab, "abab"), Strings{"xx"});
  EXPECT_EQ(outs(ab, "babb"), Strings{"bx"});
  EXPECT_EQ(outs(expr(t, "replace(a:b, c, [])"), "aab"), Strings{"aab"});
  EXPECT_EQ(outs(expr(t, "replace(a:b, c, [])"), "cab"), Strings{"cbb"});
  EXPECT_EQ(outs(expr(t, "replace(a:b, [], b)"), "aab"), Strings{"abb"});
  // Left context is read on output: after one rewrite the next a qualifies.
  EXPECT_EQ(outs(expr(t, "replace(a:b, b, [])"), "baa"), Strings{"bbb"});
}

TEST(Replace, EmptyMatches) {
  auto t = abc_table();
  EXPECT_EQ(outs(expr(t, "replace([]:c, [], [])"), "ab"), Strings{"cacbc"});
  EXPECT_EQ(outs(expr(t, "replace(a^:c, [], [])"), "a"), Strings{"c"});
  EXPECT_EQ(outs(expr(t, "replace(a:[], [], [])"), "aba"), Strings{"b"});
}

TEST(Replace, Acronym) {
  const std::string src = "#alphabet '<abbr>' '</abbr>'.\n"
                          "macro(sp, ' ').\n"
                          "macro(phrase, [n,o,n,'-',d,e,t,e,r,m,i,n,i,s,t,i,c,sp,"
                          "f,i,n,i,t,e,sp,a,u,t,o,m,a,t,o,n]).\n"
                          "replace(phrase x [N,D,F,A], '<abbr>', '</abbr>').";
  CompiledProgram p = compile_source(src);
  std::vector<std::string> tokens = multichar_tokens(*p.symbols);
  auto run = [&](std::string_view in) {
    return render_all(*p.symbols, transduce(p.machine, in, 10, tokens));
  };
  EXPECT_EQ(run("<abbr>non-deterministic finite automaton</abbr>"),
            Strings{"<abbr>NDFA</abbr>"});
  EXPECT_EQ(run("non-deterministic finite automaton</abbr>"),
            Strings{"non-deterministic finite automaton</abbr>"});
  EXPECT_EQ(run("<abbr>finite automaton</abbr>"), Strings{"<abbr>finite automaton</abbr>"});
}

TEST(Replace, EmptyDomainIsIdentity) {
  auto t = abc_table();
  MarkerAlphabet ctx(t);
  std::vector<std::string> warnings;
  Fst r = replace(ctx, {expr(t, "{}:a"), expr(t, "[]"), expr(t, "[]")},
                  default_longest_match_form(), &warnings);
  EXPECT_EQ(warnings.size(), 1u);
  EXPECT_TRUE(equivalent(r, expr(t, "?*")));
}

TEST(Replace, FunctionalRulesGiveOneOutput) {
  auto t = abc_table();
  MarkerAlphabet ctx(t);
  auto user = t->user_alphabet();
  std::mt19937_64 rng(99);
  int checked = 0;
  for (int i = 0; i < 300 && checked < 40; ++i) {
    RandomRule rr = random_rule(t, user, rng);
    bool functional = true;
    for (const Word& x : all_words(user, 6)) {
      if (oracle_outputs(rr.rule.transducer, x).size() > 1) functional = false;
    }
    if (!functional) continue;
    ++checked;
    Fst r = replace(ctx, rr.rule);
    for (const Word& s : all_words(user, 6)) {
      TransduceResult got = transduce(r, s);
      ASSERT_EQ(got.outputs.size(), 1u) << rr.description << " on " << render(*t, s);
      EXPECT_EQ(got.outputs, oracle_replace(rr.rule, s)) << rr.description;
    }
  }
  EXPECT_GE(checked, 20);
}

TEST(Replace, NoMarkerLeakage) {
  auto t = abc_table();
  MarkerAlphabet ctx(t);
  auto user = t->user_alphabet();
  std::mt19937_64 rng(7);
  for (int i = 0; i < 30; ++i) {
    RandomRule rr = random_rule(t, user, rng);
    Fst r = replace(ctx, rr.rule);
    Fst range = project(r, Side::kRange);
    for (Label reserved = 1; reserved <= 6; ++reserved) {
      Fst leak = contain(symbol(t, reserved));
      EXPECT_TRUE(is_empty(intersect(range, leak))) << rr.description;
    }
  }
}

TEST(Replace, SmallOracleSuite) {
  SuiteOptions o;
  o.samples = 40;
  o.oracle.max_len = 6;
  o.oracle.seed = 1234;
  SuiteResult r = replace_suite(o);
  EXPECT_EQ(r.cases, 40u);
  EXPECT_FALSE(r.failure) << *r.failure;
}

TEST(Replace, MarkerGlyphAlphabetSuite) {
  SuiteOptions o;
  o.samples = 40;
  o.oracle.max_len = 5;
  o.oracle.seed = 77;
  o.alphabet = {"<1", "0", "2>"};
  SuiteResult r = replace_suite(o);
  EXPECT_FALSE(r.failure) << *r.failure;
}

TEST(Replace, FormsSuite) {
  SuiteOptions o;
  o.samples = 20;
  o.oracle.max_len = 5;
  SuiteResult r = longest_match_forms_suite(o);
  EXPECT_FALSE(r.failure) << *r.failure;
}

}  // namespace
}  // namespace fsrw
