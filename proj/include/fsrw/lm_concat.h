#ifndef FSRW_LM_CONCAT_H_
#define FSRW_LM_CONCAT_H_

#include <vector>

#include "fsrw/fst.h"
#include "fsrw/markers.h"

namespace fsrw {

// range(E1 o [[xsig*, [] x E2]+, xsig+]): E1's strings with at least one E2
// inserted, never at the very end.
Fst ignx_1(const MarkerAlphabet& ctx, const Fst& e1, const Fst& e2);

// [D1 o non_markers, [] x lb1, ..., Dn o non_markers, [] x lb1]: every split
// of a string of D1...Dn, flagged, with lb1 closing each part.
Fst boundaries(const MarkerAlphabet& ctx, const std::vector<Fst>& domains);

// One filter per part but the last. Filter i rejects markings in which
// part i could have been longer while parts 1..i-1 keep their spans and
// the remaining parts still match the rest.
std::vector<Fst> greed_filters(const MarkerAlphabet& ctx,
                               const std::vector<Fst>& domains);

// boundaries o filter_1 o ... o filter_{n-1}. Marks the left-priority
// longest split of each string of D1...Dn.
Fst mark_boundaries(const MarkerAlphabet& ctx, const std::vector<Fst>& domains);

// mark_boundaries(domains) o [unflag o T1, lb1 x [], ..., unflag o Tn,
// lb1 x []]. Each part is transduced by its own machine on its capture.
// Throws StructuralError on an empty list.
Fst lm_concat(const MarkerAlphabet& ctx, const std::vector<Fst>& parts);

}  // namespace fsrw

#endif  // FSRW_LM_CONCAT_H_
