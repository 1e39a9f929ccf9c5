#include "fsrw/lm_concat.h"

#include "fsrw/algebra.h"
#include "fsrw/error.h"

namespace fsrw {

Fst ignx_1(const MarkerAlphabet& ctx, const Fst& e1, const Fst& e2) {
  const Fst insert = cross_product(empty_string(ctx.symbols()), e2);
  const Fst inserter = concat({plus(concat({ctx.xsig_star(), insert})),
                               plus(ctx.xsig())});
  return project(compose(identity_lift(e1), inserter), Side::kRange);
}

Fst boundaries(const MarkerAlphabet& ctx, const std::vector<Fst>& domains) {
  const Fst close = cross_product(empty_string(ctx.symbols()),
                                  bracket(ctx, Bracket::kLb1));
  std::vector<Fst> pieces;
  for (const Fst& d : domains) {
    pieces.push_back(compose(identity_lift(d), ctx.non_markers()));
    pieces.push_back(close);
  }
  if (pieces.empty()) return empty_string(ctx.symbols());
  return concat(pieces);
}

std::vector<Fst> greed_filters(const MarkerAlphabet& ctx,
                               const std::vector<Fst>& domains) {
  const Fst lb1 = bracket(ctx, Bracket::kLb1);
  const size_t n = domains.size();
  std::vector<Fst> flagged;
  for (const Fst& d : domains) flagged.push_back(non_markers_of(ctx, d));

  // rest[i] = [ign(D_i, lb1), ..., ign(D_n, lb1)]: the tail that must still
  // match once part i-1 has grown.
  std::vector<Fst> ignored;
  for (const Fst& f : flagged) ignored.push_back(ign(ctx, f, lb1));

  std::vector<Fst> filters;
  std::vector<Fst> front;  // [D_1, lb1, ..., D_{i-1}, lb1], kept exact
  for (size_t i = 0; i + 1 < n; ++i) {
    std::vector<Fst> pattern = front;
    pattern.push_back(ignx_1(ctx, flagged[i], lb1));
    for (size_t j = i + 1; j < n; ++j) pattern.push_back(ignored[j]);
    filters.push_back(complement(concat(pattern)));
    front.push_back(flagged[i]);
    front.push_back(lb1);
  }
  return filters;
}

Fst mark_boundaries(const MarkerAlphabet& ctx, const std::vector<Fst>& domains) {
  Fst composed = boundaries(ctx, domains);
  for (const Fst& filter : greed_filters(ctx, domains)) {
    composed = compose(composed, filter);
  }
  return composed;
}

Fst lm_concat(const MarkerAlphabet& ctx, const std::vector<Fst>& parts) {
  if (parts.empty()) throw StructuralError("lm_concat of an empty list");
  std::vector<Fst> domains;
  std::vector<Fst> pieces;
  const Fst drop_lb1 = cross_product(bracket(ctx, Bracket::kLb1),
                                     empty_string(ctx.symbols()));
  const Fst unflag = invert(ctx.non_markers());
  for (const Fst& t : parts) {
    if (t.symbols() != ctx.symbols()) {
      throw StructuralError("lm_concat part uses a different symbol table");
    }
    domains.push_back(project(t, Side::kDomain));
    pieces.push_back(compose(unflag, t));
    pieces.push_back(drop_lb1);
  }
  return compose(mark_boundaries(ctx, domains), concat(pieces));
}

}  // namespace fsrw
