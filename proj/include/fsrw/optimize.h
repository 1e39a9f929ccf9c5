#ifndef FSRW_OPTIMIZE_H_
#define FSRW_OPTIMIZE_H_

#include "fsrw/fst.h"

namespace fsrw {

// How determinize/minimize read arc labels. kLanguage requires a recognizer;
// kPairAtomic treats each (in, out) pair as one opaque symbol, which
// preserves the relation of any transducer but is not relation-minimal.
enum class LabelMode { kLanguage, kPairAtomic };

// Removes epsilon:epsilon arcs, then trims.
Fst rm_epsilon(const Fst& m);

// Keeps states that are both reachable and co-reachable. An empty result
// has exactly one non-final state.
Fst connect(const Fst& m);

Fst determinize(const Fst& m, LabelMode mode = LabelMode::kLanguage);

// Minimal deterministic machine (determinizing first when needed), in
// canonical state order.
Fst minimize(const Fst& m, LabelMode mode = LabelMode::kLanguage);

// Breadth-first renumbering from the initial state; arcs sorted by
// (in, out, next). Unreachable states are dropped.
Fst canonicalize(const Fst& m);

// rm_epsilon + determinize + minimize + canonicalize, pair-atomic for
// transducers. Every algebra result passes through here.
Fst optimize(const Fst& m);

bool is_deterministic(const Fst& m);

// True iff the minimized canonical forms are identical. Decides language
// equality for recognizers; for transducers it is pair-atomic equality,
// which implies but is not implied by relation equality.
bool equivalent(const Fst& a, const Fst& b);

// Exact structural equality (same ids, finals and sorted arcs).
bool identical(const Fst& a, const Fst& b);

// True iff no final state is reachable.
bool is_empty(const Fst& m);

// True iff the language/relation is infinite (a cycle on a path from the
// initial state to a final state that reads or writes something).
bool is_cyclic(const Fst& m);

}  // namespace fsrw

#endif  // FSRW_OPTIMIZE_H_
