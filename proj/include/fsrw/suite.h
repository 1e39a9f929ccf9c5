#ifndef FSRW_SUITE_H_
#define FSRW_SUITE_H_

#include <optional>
#include <string>
#include <vector>

#include "fsrw/oracle.h"
#include "fsrw/replace.h"

namespace fsrw {

// Randomized compiler/oracle agreement runs. Sample i draws from its own
// generator seeded with (seed, i), so results do not depend on `threads`.
struct SuiteOptions {
  OracleConfig oracle;
  size_t samples = 200;
  std::vector<std::string> alphabet = {"a", "b", "c"};
  LongestMatchForm form = default_longest_match_form();
  unsigned threads = 0;  // 0: hardware concurrency
};

struct SuiteResult {
  size_t cases = 0;  // samples checked
  size_t words = 0;  // inputs compared over all samples
  std::optional<std::string> failure;  // first disagreement, by sample index
};

// replace(T, Left, Right) against oracle_replace on every word up to
// max_len.
SuiteResult replace_suite(const SuiteOptions& options);

// mark_boundaries against oracle_lm_split, and lm_concat against the
// per-part oracle, for 1..3 random parts.
SuiteResult lm_concat_suite(const SuiteOptions& options);

// replace(lm_concat(parts), Left, Right) against oracle_replace driven by
// the multi-capture oracle.
SuiteResult multi_capture_suite(const SuiteOptions& options);

// Compiles one sample with both longest_match forms and checks that the
// results are identical after minimization and agree on every word.
SuiteResult longest_match_forms_suite(const SuiteOptions& options);

}  // namespace fsrw

#endif  // FSRW_SUITE_H_
