#ifndef FSRW_MARKERS_H_
#define FSRW_MARKERS_H_

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "fsrw/fst.h"

namespace fsrw {

// Alphabets of the flagged encoding. In encoded strings every symbol is a
// cell: a glyph followed by the flag "0" (ordinary text) or "1" (marker).
// Markerhood is positional, so "<1" followed by "0" is plain text and the
// glyphs "0" and "1" are usable as ordinary symbols.
//
// Snapshots the table's user alphabet on construction; register every
// user symbol first.
class MarkerAlphabet {
 public:
  explicit MarkerAlphabet(SymbolTablePtr symbols);

  const SymbolTablePtr& symbols() const { return symbols_; }

  // Sigma_user: the rule-level `?`.
  const std::vector<Label>& user() const { return user_; }
  // Glyphs allowed in a cell: Sigma_user plus the four bracket glyphs.
  const std::vector<Label>& encoded() const { return encoded_; }

  Label flag0() const { return symbols_->flag0(); }
  Label flag1() const { return symbols_->flag1(); }

  // Cached building blocks.
  const Fst& sig() const;        // [?, 0]
  const Fst& xsig() const;       // [?, {0,1}]
  const Fst& xsig_star() const;  // xsig*
  const Fst& non_markers() const;
  const Fst& universal() const;  // Pi*

 private:
  SymbolTablePtr symbols_;
  std::vector<Label> user_;
  std::vector<Label> encoded_;

  mutable std::mutex cache_mutex_;
  mutable std::optional<Fst> sig_, xsig_, xsig_star_, non_markers_, universal_;
};

enum class Bracket { kLb1, kLb2, kRb1, kRb2 };

// The marker cell [glyph, 1].
Fst bracket(const MarkerAlphabet& ctx, Bracket b);
Fst lb(const MarkerAlphabet& ctx);     // {lb1, lb2}
Fst rb(const MarkerAlphabet& ctx);     // {rb1, rb2}
Fst b1(const MarkerAlphabet& ctx);     // {lb1, rb1}
Fst b2(const MarkerAlphabet& ctx);     // {lb2, rb2}
Fst brack(const MarkerAlphabet& ctx);  // all four

// [?, []:0]* over Sigma_user: writes a 0 after every symbol.
Fst non_markers(const MarkerAlphabet& ctx);
// range(E o non_markers): E's strings in flagged form.
Fst non_markers_of(const MarkerAlphabet& ctx, const Fst& e);

Fst sig(const MarkerAlphabet& ctx);
Fst xsig(const MarkerAlphabet& ctx);
// xsig* - X
Fst not_enc(const MarkerAlphabet& ctx, const Fst& x);
// [xsig*, X, xsig*]
Fst contains_enc(const MarkerAlphabet& ctx, const Fst& x);

enum class IntroKind { kIntro, kXIntro, kIntroX, kXIntroX };

// Freely inserts cells of S; the x-variants forbid insertion at the very
// beginning (xintro), end (introx) or both (xintrox). S must be a union of
// single cells; anything else throws CoercionError.
Fst intro_family(const MarkerAlphabet& ctx, IntroKind kind, const Fst& s);
Fst intro(const MarkerAlphabet& ctx, const Fst& s);
Fst xintro(const MarkerAlphabet& ctx, const Fst& s);
Fst introx(const MarkerAlphabet& ctx, const Fst& s);
Fst xintrox(const MarkerAlphabet& ctx, const Fst& s);

enum class IgnoreKind { kIgn, kXIgn, kIgnX, kXIgnX };

// range(E o <intro variant>(S)).
Fst ignore_family(const MarkerAlphabet& ctx, IgnoreKind kind, const Fst& e,
                  const Fst& s);
Fst ign(const MarkerAlphabet& ctx, const Fst& e, const Fst& s);
Fst xign(const MarkerAlphabet& ctx, const Fst& e, const Fst& s);
Fst ignx(const MarkerAlphabet& ctx, const Fst& e, const Fst& s);
Fst xignx(const MarkerAlphabet& ctx, const Fst& e, const Fst& s);

enum class FilterKind { kIfPThenS, kIfSThenP, kPIffS };

// if_p_then_s(L1,L2) = not([L1, not(L2)])
// if_s_then_p(L1,L2) = not([not(L1), L2])
// p_iff_s = both.
Fst prefix_suffix_filter(const MarkerAlphabet& ctx, FilterKind kind,
                         const Fst& l1, const Fst& l2);
Fst if_p_then_s(const MarkerAlphabet& ctx, const Fst& l1, const Fst& l2);
Fst if_s_then_p(const MarkerAlphabet& ctx, const Fst& l1, const Fst& l2);
Fst p_iff_s(const MarkerAlphabet& ctx, const Fst& l1, const Fst& l2);
// Every position is preceded by L exactly when it is followed by R:
// p_iff_s([xsig*, L], [R, xsig*]).
Fst l_iff_r(const MarkerAlphabet& ctx, const Fst& l, const Fst& r);

// true is Pi*, false the empty language.
Fst true_lang(const MarkerAlphabet& ctx);
Fst false_lang(const MarkerAlphabet& ctx);
// range(E o (true x true)): Pi* when E is nonempty, else empty.
Fst coerce_to_boolean(const MarkerAlphabet& ctx, const Fst& e);
// {coerce(C) o Then, ~coerce(C) o Else}
Fst if_then_else(const MarkerAlphabet& ctx, const Fst& cond,
                 const Fst& then_branch, const Fst& else_branch);

}  // namespace fsrw

#endif  // FSRW_MARKERS_H_
