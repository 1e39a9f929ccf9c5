#ifndef FSRW_ALGEBRA_H_
#define FSRW_ALGEBRA_H_

#include <span>
#include <vector>

#include "fsrw/fst.h"

namespace fsrw {

// Every operation below returns an optimized machine (see optimize.h):
// epsilon-free, deterministic over labels (pair-atomic for transducers),
// minimal and canonically numbered.

// ---- Primitive machines ----

Fst empty_language(SymbolTablePtr symbols);
Fst empty_string(SymbolTablePtr symbols);
// The one-symbol string `sym`.
Fst symbol(SymbolTablePtr symbols, Label sym);
// The pair in:out; either side may be kEpsilon.
Fst symbol_pair(SymbolTablePtr symbols, Label in, Label out);
// One-symbol strings drawn from `alphabet`.
Fst any_of(SymbolTablePtr symbols, std::span<const Label> alphabet);
Fst word(SymbolTablePtr symbols, std::span<const Label> w);
// Pi*: every string over the whole table.
Fst universal(SymbolTablePtr symbols);

// ---- Rational operations ----

enum class RationalOp { kUnion, kConcat, kStar, kPlus, kOption };

// Union and concat take any number of operands (empty union is the empty
// language, empty concat the empty string); the closures take exactly one.
Fst rational_combine(RationalOp op, const std::vector<Fst>& operands);

Fst union_of(const std::vector<Fst>& operands);
Fst concat(const std::vector<Fst>& operands);
Fst star(const Fst& m);
Fst plus(const Fst& m);
Fst option(const Fst& m);

// ---- Boolean operations (recognizers only) ----

enum class BooleanOp { kComplement, kDifference, kIntersection, kContainment };

// Complement and containment are unary, difference and intersection binary.
// Complement is relative to Pi*, the full symbol table. A transducer operand
// throws CoercionError.
Fst boolean_combine(BooleanOp op, const std::vector<Fst>& operands);

Fst complement(const Fst& m);
Fst difference(const Fst& a, const Fst& b);
Fst intersect(const Fst& a, const Fst& b);
// [Pi*, m, Pi*]
Fst contain(const Fst& m);

// ---- Relations ----

// L(a) x L(b). Strings of unequal length are aligned with trailing
// epsilons on the shorter side.
Fst cross_product(const Fst& a, const Fst& b);

// {(x, z) | (x, y) in a, (y, z) in b}, with an epsilon-matching filter.
Fst compose(const Fst& a, const Fst& b);

// Left-to-right composition of a chain.
Fst compose_all(const std::vector<Fst>& chain);

enum class Side { kDomain, kRange };
Fst project(const Fst& t, Side side);

// Maps each accepted string to itself. Throws CoercionError on transducers.
Fst identity_lift(const Fst& r);
Fst invert(const Fst& t);

}  // namespace fsrw

#endif  // FSRW_ALGEBRA_H_
