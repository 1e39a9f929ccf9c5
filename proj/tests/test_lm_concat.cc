#include <gtest/gtest.h>

#include "fsrw/error.h"
#include "fsrw/lm_concat.h"
#include "fsrw/markers.h"
#include "fsrw/optimize.h"
#include "fsrw/suite.h"
#include "test_support.h"

namespace fsrw {
namespace {

using testing::expr;
using testing::w;

using Strings = std::vector<std::string>;
using Split = std::vector<size_t>;

SymbolTablePtr letters(std::string_view glyphs) {
  auto t = SymbolTable::create();
  for (char ch : glyphs) t->add_user_symbol(std::string(1, ch));
  return t;
}

std::optional<Split> marked_split(const MarkerAlphabet& ctx, const std::vector<Fst>& domains,
                                  std::string_view s) {
  TransduceResult r = transduce(mark_boundaries(ctx, domains), s);
  if (r.outputs.size() != 1) return std::nullopt;
  return read_split(*ctx.symbols(), r.outputs[0]);
}

TEST(MarkBoundaries, WorkedExampleSplit) {
  auto t = letters("topligca#");
  MarkerAlphabet ctx(t);
  std::vector<Fst> d{expr(t, "{[t,o],[t,o,p]}"), expr(t, "{o,[p,o,l,o]}"),
                     expr(t, "{[g,i,c,a,l],[o^,l,o,g,i,c,a,l]}")};
  EXPECT_EQ(marked_split(ctx, d, "topological"), (Split{3, 4, 11}));
  EXPECT_EQ(oracle_lm_split(d, w(t, "topological")), (Split{3, 4, 11}));
}

TEST(MarkBoundaries, SingleDomain) {
  auto t = letters("ab");
  MarkerAlphabet ctx(t);
  std::vector<Fst> d{expr(t, "?*")};
  TransduceResult r = transduce(mark_boundaries(ctx, d), "ab");
  EXPECT_EQ(render_all(*t, r), Strings{"a0b0<11"});
}

TEST(MarkBoundaries, GreedyButLeavesRoom) {
  auto t = letters("a");
  MarkerAlphabet ctx(t);
  std::vector<Fst> d{expr(t, "a*"), expr(t, "a")};
  EXPECT_EQ(marked_split(ctx, d, "aaa"), (Split{2, 3}));
  EXPECT_EQ(oracle_lm_split(d, w(t, "aaa")), (Split{2, 3}));
}

// Flagged parts, each closed by an lb1 cell.
Word enc_split(const SymbolTable& t, std::string_view first, std::string_view second) {
  Word out;
  for (std::string_view part : {first, second}) {
    for (char ch : part) {
      out.push_back(t.find(std::string(1, ch)));
      out.push_back(t.flag0());
    }
    out.push_back(t.lb1());
    out.push_back(t.flag1());
  }
  return out;
}

TEST(GreedFilters, RejectShortFirstPart) {
  auto t = letters("a");
  MarkerAlphabet ctx(t);
  std::vector<Fst> d{expr(t, "a*"), expr(t, "a")};
  auto filters = greed_filters(ctx, d);
  ASSERT_EQ(filters.size(), 1u);
  // a | aa and aa | a as flagged strings with lb1 after each part.
  Word short_split = enc_split(*t, "a", "aa");
  Word long_split = enc_split(*t, "aa", "a");
  EXPECT_FALSE(accepts(filters[0], short_split));
  EXPECT_TRUE(accepts(filters[0], long_split));
  EXPECT_TRUE(filters[0].is_recognizer());
}

TEST(GreedFilters, SingleDomainHasNone) {
  auto t = letters("a");
  MarkerAlphabet ctx(t);
  EXPECT_TRUE(greed_filters(ctx, {expr(t, "a*")}).empty());
}

TEST(Ignx1, InsertsButNeverLast) {
  auto t = letters("a");
  MarkerAlphabet ctx(t);
  Fst lb1 = bracket(ctx, Bracket::kLb1);
  Fst m = ignx_1(ctx, non_markers_of(ctx, expr(t, "a")), lb1);
  Label a = t->find("a"), f0 = t->flag0(), f1 = t->flag1(), l = t->lb1();
  EXPECT_TRUE(accepts(m, Word{l, f1, a, f0}));
  EXPECT_FALSE(accepts(m, Word{a, f0}));
  EXPECT_FALSE(accepts(m, Word{a, f0, l, f1}));
  EXPECT_TRUE(accepts(m, Word{l, f1, l, f1, a, f0}));
  for (const Word& x : oracle_language(m, 6)) {
    EXPECT_FALSE(x.size() >= 2 && x[x.size() - 2] == l) << render(*t, x);
  }
}

TEST(LmConcat, WorkedExample) {
  auto t = letters("topligca#");
  MarkerAlphabet ctx(t);
  std::vector<Fst> parts{expr(t, "[{[t,o],[t,o,p]}, []:'#']"),
                         expr(t, "[{o,[p,o,l,o]}, []:'#']"),
                         expr(t, "{[g,i,c,a,l],[o^,l,o,g,i,c,a,l]}")};
  Fst m = lm_concat(ctx, parts);
  EXPECT_EQ(testing::outs(m, "topological"), Strings{"top#o#logical"});
  EXPECT_TRUE(testing::outs(m, "polotopogical").empty());
}

TEST(LmConcat, SinglePart) {
  auto t = letters("t");
  MarkerAlphabet ctx(t);
  EXPECT_EQ(testing::outs(lm_concat(ctx, {expr(t, "t:t")}), "t"), Strings{"t"});
  EXPECT_THROW(lm_concat(ctx, {}), StructuralError);
}

TEST(LmConcat, DomainLaw) {
  auto t = letters("abc");
  MarkerAlphabet ctx(t);
  std::mt19937_64 rng(17);
  auto user = t->user_alphabet();
  for (int i = 0; i < 30; ++i) {
    std::vector<Fst> parts, domains;
    for (int k = 0; k < 1 + i % 3; ++k) {
      parts.push_back(random_transducer(t, user, rng));
      domains.push_back(project(parts.back(), Side::kDomain));
    }
    EXPECT_TRUE(equivalent(project(lm_concat(ctx, parts), Side::kDomain), concat(domains)));
  }
}

TEST(LmConcat, OutputsArePure) {
  auto t = letters("abc");
  MarkerAlphabet ctx(t);
  std::mt19937_64 rng(23);
  auto user = t->user_alphabet();
  for (int i = 0; i < 30; ++i) {
    std::vector<Fst> parts;
    for (int k = 0; k < 1 + i % 3; ++k) parts.push_back(random_transducer(t, user, rng));
    Fst range = project(lm_concat(ctx, parts), Side::kRange);
    for (Label reserved = 1; reserved <= 6; ++reserved) {
      EXPECT_TRUE(is_empty(intersect(range, contain(symbol(t, reserved)))));
    }
  }
}

TEST(LmConcat, SmallSuites) {
  SuiteOptions o;
  o.samples = 40;
  o.oracle.max_len = 6;
  SuiteResult a = lm_concat_suite(o);
  EXPECT_FALSE(a.failure) << *a.failure;
  o.samples = 25;
  o.oracle.max_len = 5;
  SuiteResult b = multi_capture_suite(o);
  EXPECT_FALSE(b.failure) << *b.failure;
}

}  // namespace
}  // namespace fsrw
