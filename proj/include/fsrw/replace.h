#ifndef FSRW_REPLACE_H_
#define FSRW_REPLACE_H_

#include <string>
#include <vector>

#include "fsrw/fst.h"
#include "fsrw/markers.h"

namespace fsrw {

// x => T(x) / Left __ Right, leftmost-longest, left to right.
//
// Right is checked against the unrewritten input; Left against the output
// already produced to the left of the match.
struct ReplaceRule {
  Fst transducer;  // T; a recognizer is read as its identity
  Fst left;        // recognizer, user level
  Fst right;       // recognizer, user level
};

// Which filter longest_match builds. The prefix-constrained form replaces
// the "contains rb1" conjunct by "Phi (brackets ignored) then rb1", which
// denotes the same filter on every string left_to_right can produce.
enum class LongestMatchForm { kStandard, kPrefixConstrained };

LongestMatchForm default_longest_match_form();

// Step 2. Inserts rb2 before every position whose suffix is in R.
Fst r_right(const MarkerAlphabet& ctx, const Fst& right);

// Step 3. Inserts lb2 before every Phi that ends at an rb2.
Fst f_phi(const MarkerAlphabet& ctx, const Fst& phi);

// Step 4. Nondeterministically turns some lb2 ... rb2 spans into
// lb1 ... rb1, deleting the lb2 markers inside them.
Fst left_to_right(const MarkerAlphabet& ctx, const Fst& phi);

// Step 5. Rejects selections that are not longest, then deletes rb2.
Fst longest_match(const MarkerAlphabet& ctx, const Fst& phi,
                  LongestMatchForm form = default_longest_match_form());

// Step 6. Applies T inside every lb1 ... rb1 region and drops rb1.
Fst aux_replace(const MarkerAlphabet& ctx, const Fst& t);

// Step 7. Every lb1 follows Left; then lb1 is deleted.
Fst l1(const MarkerAlphabet& ctx, const Fst& left);

// Step 8. No lb2 follows Left; then lb2 is deleted.
Fst l2(const MarkerAlphabet& ctx, const Fst& left);

// The nine factors in application order, starting with non_markers and
// ending with its inverse. Appends a note to `warnings` (if given) when
// domain(T) is empty; the result is then the identity.
std::vector<Fst> replace_factors(
    const MarkerAlphabet& ctx, const ReplaceRule& rule,
    LongestMatchForm form = default_longest_match_form(),
    std::vector<std::string>* warnings = nullptr);

// The composed factors.
Fst replace(const MarkerAlphabet& ctx, const ReplaceRule& rule,
            LongestMatchForm form = default_longest_match_form(),
            std::vector<std::string>* warnings = nullptr);

}  // namespace fsrw

#endif  // FSRW_REPLACE_H_
