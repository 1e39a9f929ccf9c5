#include "fsrw/markers.h"

#include <algorithm>

#include "fsrw/algebra.h"
#include "fsrw/error.h"
#include "fsrw/optimize.h"

namespace fsrw {

MarkerAlphabet::MarkerAlphabet(SymbolTablePtr symbols)
    : symbols_(std::move(symbols)) {
  user_ = symbols_->user_alphabet();
  encoded_ = user_;
  for (Label l : {symbols_->lb1(), symbols_->lb2(), symbols_->rb1(),
                  symbols_->rb2()}) {
    if (std::find(encoded_.begin(), encoded_.end(), l) == encoded_.end()) {
      encoded_.push_back(l);
    }
  }
  std::sort(encoded_.begin(), encoded_.end());
}

const Fst& MarkerAlphabet::sig() const {
  std::lock_guard lock(cache_mutex_);
  if (!sig_) {
    sig_ = concat({any_of(symbols_, encoded_), symbol(symbols_, flag0())});
  }
  return *sig_;
}

const Fst& MarkerAlphabet::xsig() const {
  std::lock_guard lock(cache_mutex_);
  if (!xsig_) {
    const Label flags[] = {flag0(), flag1()};
    xsig_ = concat({any_of(symbols_, encoded_), any_of(symbols_, flags)});
  }
  return *xsig_;
}

const Fst& MarkerAlphabet::xsig_star() const {
  const Fst& cell = xsig();
  std::lock_guard lock(cache_mutex_);
  if (!xsig_star_) xsig_star_ = star(cell);
  return *xsig_star_;
}

const Fst& MarkerAlphabet::non_markers() const {
  std::lock_guard lock(cache_mutex_);
  if (!non_markers_) {
    non_markers_ = star(concat({any_of(symbols_, user_),
                                symbol_pair(symbols_, kEpsilon, flag0())}));
  }
  return *non_markers_;
}

const Fst& MarkerAlphabet::universal() const {
  std::lock_guard lock(cache_mutex_);
  if (!universal_) universal_ = fsrw::universal(symbols_);
  return *universal_;
}

Fst bracket(const MarkerAlphabet& ctx, Bracket b) {
  const SymbolTable& t = *ctx.symbols();
  Label glyph = kEpsilon;
  switch (b) {
    case Bracket::kLb1: glyph = t.lb1(); break;
    case Bracket::kLb2: glyph = t.lb2(); break;
    case Bracket::kRb1: glyph = t.rb1(); break;
    case Bracket::kRb2: glyph = t.rb2(); break;
  }
  const Label cell[] = {glyph, ctx.flag1()};
  return word(ctx.symbols(), cell);
}

Fst lb(const MarkerAlphabet& ctx) {
  return union_of({bracket(ctx, Bracket::kLb1), bracket(ctx, Bracket::kLb2)});
}
Fst rb(const MarkerAlphabet& ctx) {
  return union_of({bracket(ctx, Bracket::kRb1), bracket(ctx, Bracket::kRb2)});
}
Fst b1(const MarkerAlphabet& ctx) {
  return union_of({bracket(ctx, Bracket::kLb1), bracket(ctx, Bracket::kRb1)});
}
Fst b2(const MarkerAlphabet& ctx) {
  return union_of({bracket(ctx, Bracket::kLb2), bracket(ctx, Bracket::kRb2)});
}
Fst brack(const MarkerAlphabet& ctx) { return union_of({lb(ctx), rb(ctx)}); }

Fst non_markers(const MarkerAlphabet& ctx) { return ctx.non_markers(); }

Fst non_markers_of(const MarkerAlphabet& ctx, const Fst& e) {
  return project(compose(identity_lift(e), ctx.non_markers()), Side::kRange);
}

Fst sig(const MarkerAlphabet& ctx) { return ctx.sig(); }
Fst xsig(const MarkerAlphabet& ctx) { return ctx.xsig(); }

Fst not_enc(const MarkerAlphabet& ctx, const Fst& x) {
  return difference(ctx.xsig_star(), x);
}

Fst contains_enc(const MarkerAlphabet& ctx, const Fst& x) {
  return concat({ctx.xsig_star(), x, ctx.xsig_star()});
}

namespace {

// xsig - S, after checking that S is a union of single cells.
Fst other_cells(const MarkerAlphabet& ctx, const Fst& s) {
  if (!s.is_recognizer()) {
    throw CoercionError("intro/ignore argument must be a language of cells");
  }
  if (!is_empty(difference(s, ctx.xsig()))) {
    throw CoercionError(
        "intro/ignore argument must be a union of single marker cells");
  }
  return difference(ctx.xsig(), s);
}

}  // namespace

Fst intro_family(const MarkerAlphabet& ctx, IntroKind kind, const Fst& s) {
  const Fst others = other_cells(ctx, s);
  const Fst base = star(
      union_of({others, cross_product(empty_string(ctx.symbols()), s)}));
  const Fst eps = empty_string(ctx.symbols());
  switch (kind) {
    case IntroKind::kIntro:
      return base;
    case IntroKind::kXIntro:
      return union_of({eps, concat({others, base})});
    case IntroKind::kIntroX:
      return union_of({eps, concat({base, others})});
    case IntroKind::kXIntroX:
      return union_of({eps, others, concat({others, base, others})});
  }
  throw StructuralError("unknown intro kind");
}

Fst intro(const MarkerAlphabet& ctx, const Fst& s) {
  return intro_family(ctx, IntroKind::kIntro, s);
}
Fst xintro(const MarkerAlphabet& ctx, const Fst& s) {
  return intro_family(ctx, IntroKind::kXIntro, s);
}
Fst introx(const MarkerAlphabet& ctx, const Fst& s) {
  return intro_family(ctx, IntroKind::kIntroX, s);
}
Fst xintrox(const MarkerAlphabet& ctx, const Fst& s) {
  return intro_family(ctx, IntroKind::kXIntroX, s);
}

Fst ignore_family(const MarkerAlphabet& ctx, IgnoreKind kind, const Fst& e,
                  const Fst& s) {
  IntroKind ik = IntroKind::kIntro;
  switch (kind) {
    case IgnoreKind::kIgn: ik = IntroKind::kIntro; break;
    case IgnoreKind::kXIgn: ik = IntroKind::kXIntro; break;
    case IgnoreKind::kIgnX: ik = IntroKind::kIntroX; break;
    case IgnoreKind::kXIgnX: ik = IntroKind::kXIntroX; break;
  }
  return project(compose(identity_lift(e), intro_family(ctx, ik, s)),
                 Side::kRange);
}

Fst ign(const MarkerAlphabet& ctx, const Fst& e, const Fst& s) {
  return ignore_family(ctx, IgnoreKind::kIgn, e, s);
}
Fst xign(const MarkerAlphabet& ctx, const Fst& e, const Fst& s) {
  return ignore_family(ctx, IgnoreKind::kXIgn, e, s);
}
Fst ignx(const MarkerAlphabet& ctx, const Fst& e, const Fst& s) {
  return ignore_family(ctx, IgnoreKind::kIgnX, e, s);
}
Fst xignx(const MarkerAlphabet& ctx, const Fst& e, const Fst& s) {
  return ignore_family(ctx, IgnoreKind::kXIgnX, e, s);
}

Fst prefix_suffix_filter(const MarkerAlphabet& ctx, FilterKind kind,
                         const Fst& l1, const Fst& l2) {
  switch (kind) {
    case FilterKind::kIfPThenS:
      return not_enc(ctx, concat({l1, not_enc(ctx, l2)}));
    case FilterKind::kIfSThenP:
      return not_enc(ctx, concat({not_enc(ctx, l1), l2}));
    case FilterKind::kPIffS:
      return intersect(
          prefix_suffix_filter(ctx, FilterKind::kIfPThenS, l1, l2),
          prefix_suffix_filter(ctx, FilterKind::kIfSThenP, l1, l2));
  }
  throw StructuralError("unknown filter kind");
}

Fst if_p_then_s(const MarkerAlphabet& ctx, const Fst& l1, const Fst& l2) {
  return prefix_suffix_filter(ctx, FilterKind::kIfPThenS, l1, l2);
}
Fst if_s_then_p(const MarkerAlphabet& ctx, const Fst& l1, const Fst& l2) {
  return prefix_suffix_filter(ctx, FilterKind::kIfSThenP, l1, l2);
}
Fst p_iff_s(const MarkerAlphabet& ctx, const Fst& l1, const Fst& l2) {
  return prefix_suffix_filter(ctx, FilterKind::kPIffS, l1, l2);
}

Fst l_iff_r(const MarkerAlphabet& ctx, const Fst& l, const Fst& r) {
  return p_iff_s(ctx, concat({ctx.xsig_star(), l}),
                 concat({r, ctx.xsig_star()}));
}

Fst true_lang(const MarkerAlphabet& ctx) { return ctx.universal(); }

Fst false_lang(const MarkerAlphabet& ctx) {
  return empty_language(ctx.symbols());
}

Fst coerce_to_boolean(const MarkerAlphabet& ctx, const Fst& e) {
  const Fst everything = cross_product(true_lang(ctx), true_lang(ctx));
  return project(compose(e, everything), Side::kRange);
}

Fst if_then_else(const MarkerAlphabet& ctx, const Fst& cond,
                 const Fst& then_branch, const Fst& else_branch) {
  const Fst c = coerce_to_boolean(ctx, cond);
  return union_of({compose(c, then_branch),
                   compose(complement(c), else_branch)});
}

}  // namespace fsrw
