#include "fsrw/replace.h"

#include "fsrw/algebra.h"
#include "fsrw/error.h"
#include "fsrw/optimize.h"

namespace fsrw {

LongestMatchForm default_longest_match_form() {
#ifdef FSRW_OPTIMIZED_LONGEST_MATCH
  return LongestMatchForm::kPrefixConstrained;
#else
  return LongestMatchForm::kStandard;
#endif
}

Fst r_right(const MarkerAlphabet& ctx, const Fst& right) {
  if (!right.is_recognizer()) {
    throw CoercionError("right context must be a recognizer");
  }
  const auto& syms = ctx.symbols();
  const Fst rb2 = bracket(ctx, Bracket::kRb2);
  const Fst insert_rb2 = cross_product(empty_string(syms), rb2);
  // {} or Pi* depending on whether Right accepts the empty string.
  const Fst cond = intersect(empty_string(syms), right);
  const Fst everywhere =
      concat({star(concat({insert_rb2, ctx.sig()})), insert_rb2});
  const Fst constrained =
      compose(intro(ctx, rb2),
              l_iff_r(ctx, rb2, xign(ctx, non_markers_of(ctx, right), rb2)));
  return if_then_else(ctx, cond, everywhere, constrained);
}

Fst f_phi(const MarkerAlphabet& ctx, const Fst& phi) {
  const Fst lb2 = bracket(ctx, Bracket::kLb2);
  const Fst rb2 = bracket(ctx, Bracket::kRb2);
  // The optional lb2 lets a match end where an empty candidate starts. It
  // may only follow a nonempty instance, or every empty candidate would
  // be forced to carry two lb2 markers.
  const Fst empty = empty_string(ctx.symbols());
  const Fst nonempty =
      xignx(ctx, non_markers_of(ctx, difference(phi, empty)), b2(ctx));
  const Fst followed = concat(
      {union_of({concat({nonempty, option(lb2)}), intersect(phi, empty)}), rb2});
  return compose(intro(ctx, lb2), l_iff_r(ctx, lb2, followed));
}

Fst left_to_right(const MarkerAlphabet& ctx, const Fst& phi) {
  const Fst lb1 = bracket(ctx, Bracket::kLb1);
  const Fst lb2 = bracket(ctx, Bracket::kLb2);
  const Fst rb1 = bracket(ctx, Bracket::kRb1);
  const Fst rb2 = bracket(ctx, Bracket::kRb2);
  const Fst body = compose(ign(ctx, non_markers_of(ctx, phi), b2(ctx)),
                           invert(intro(ctx, lb2)));
  const Fst region =
      concat({cross_product(lb2, lb1), body, cross_product(rb2, rb1)});
  return concat(
      {star(concat({ctx.xsig_star(), region})), ctx.xsig_star()});
}

Fst longest_match(const MarkerAlphabet& ctx, const Fst& phi,
                  LongestMatchForm form) {
  const Fst lb1 = bracket(ctx, Bracket::kLb1);
  const Fst rb1 = bracket(ctx, Bracket::kRb1);
  const Fst rb2 = bracket(ctx, Bracket::kRb2);
  const Fst flagged = non_markers_of(ctx, phi);
  const Fst has_rb1 =
      form == LongestMatchForm::kStandard
          ? contains_enc(ctx, rb1)
          : concat({ign(ctx, flagged, brack(ctx)), rb1, ctx.xsig_star()});
  // option(lb): the longer instance may end where an empty candidate
  // (selected or not) sits in front of the closing bracket.
  const Fst longer = concat({lb1, intersect(ignx(ctx, flagged, brack(ctx)), has_rb1),
                             option(lb(ctx)), rb(ctx)});
  return compose(not_enc(ctx, contains_enc(ctx, longer)),
                 invert(intro(ctx, rb2)));
}

Fst aux_replace(const MarkerAlphabet& ctx, const Fst& t) {
  const auto& syms = ctx.symbols();
  const Fst lb1 = bracket(ctx, Bracket::kLb1);
  const Fst lb2 = bracket(ctx, Bracket::kLb2);
  const Fst rb1 = bracket(ctx, Bracket::kRb1);
  const Fst inside = compose_all({invert(ctx.non_markers()), t, ctx.non_markers()});
  const Fst region =
      concat({lb1, inside, cross_product(rb1, empty_string(syms))});
  return star(union_of({union_of({ctx.sig(), lb2}), region}));
}

Fst l1(const MarkerAlphabet& ctx, const Fst& left) {
  if (!left.is_recognizer()) {
    throw CoercionError("left context must be a recognizer");
  }
  const Fst lb1 = bracket(ctx, Bracket::kLb1);
  const Fst lb2 = bracket(ctx, Bracket::kLb2);
  // ign rather than ignx: a match with empty output puts two lb1 side by
  // side, and the second one sees the same left context as the first.
  const Fst ends_in_left =
      ign(ctx, concat({ctx.xsig_star(), non_markers_of(ctx, left)}), lb1);
  const Fst filter = ign(
      ctx, if_s_then_p(ctx, ends_in_left, concat({lb1, ctx.xsig_star()})), lb2);
  return compose(filter, invert(intro(ctx, lb1)));
}

Fst l2(const MarkerAlphabet& ctx, const Fst& left) {
  if (!left.is_recognizer()) {
    throw CoercionError("left context must be a recognizer");
  }
  const Fst lb2 = bracket(ctx, Bracket::kLb2);
  // ign for the same reason as in l1: empty and nonempty candidates can
  // share a position.
  const Fst not_left = ign(
      ctx,
      not_enc(ctx, concat({ctx.xsig_star(), non_markers_of(ctx, left)})), lb2);
  const Fst filter =
      if_s_then_p(ctx, not_left, concat({lb2, ctx.xsig_star()}));
  return compose(filter, invert(intro(ctx, lb2)));
}

std::vector<Fst> replace_factors(const MarkerAlphabet& ctx,
                                 const ReplaceRule& rule,
                                 LongestMatchForm form,
                                 std::vector<std::string>* warnings) {
  require_same_table(rule.transducer, rule.left);
  require_same_table(rule.transducer, rule.right);
  if (rule.transducer.symbols() != ctx.symbols()) {
    throw StructuralError("rule and marker alphabet use different tables");
  }
  const Fst phi = project(rule.transducer, Side::kDomain);
  if (warnings && is_empty(phi)) {
    warnings->push_back("empty-domain rule: replace is the identity");
  }
  return {
      ctx.non_markers(),
      r_right(ctx, rule.right),
      f_phi(ctx, phi),
      left_to_right(ctx, phi),
      longest_match(ctx, phi, form),
      aux_replace(ctx, rule.transducer),
      l1(ctx, rule.left),
      l2(ctx, rule.left),
      invert(ctx.non_markers()),
  };
}

Fst replace(const MarkerAlphabet& ctx, const ReplaceRule& rule,
            LongestMatchForm form, std::vector<std::string>* warnings) {
  return compose_all(replace_factors(ctx, rule, form, warnings));
}

}  // namespace fsrw
