#ifndef FSRW_ORACLE_H_
#define FSRW_ORACLE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "fsrw/fst.h"
#include "fsrw/replace.h"
#include "fsrw/transduce.h"

// Brute-force reference semantics. Machines are consulted only by walking
// their paths (accepts() and output enumeration); nothing here composes,
// determinizes or otherwise uses the algebra it is meant to check.

namespace fsrw {

struct OracleConfig {
  int max_len = 8;      // longest input enumerated
  size_t limit = 1000;  // output cap per input
  uint64_t seed = 42;
};

// Every word over `alphabet` of length <= max_len, shortest first.
std::vector<Word> all_words(std::span<const Label> alphabet, int max_len);

// {s : |s| <= max_len, m accepts s}, sorted. Enumerates over the whole
// symbol table unless `alphabet` is given. Dead prefixes are pruned.
std::vector<Word> oracle_language(const Fst& m, int max_len);
std::vector<Word> oracle_language(const Fst& m, std::span<const Label> alphabet,
                                  int max_len);

// Outputs of t on `input` by path enumeration, sorted. Outputs longer than
// max_output are not followed, which bounds input-epsilon cycles.
std::vector<Word> oracle_outputs(const Fst& t, std::span<const Label> input,
                                 size_t max_output = 64);

// What oracle_replace needs to know about the rewrite.
struct TransductionOracle {
  std::function<bool(std::span<const Label>)> in_domain;
  std::function<std::vector<Word>(std::span<const Label>)> outputs;
};

TransductionOracle machine_oracle(const Fst& t);

// The unique left-priority longest split of s into parts of domains[0..n):
// the end offset of every part. nullopt if s has no split.
std::optional<std::vector<size_t>> oracle_lm_split(
    const std::vector<Fst>& domains, std::span<const Label> s);

// Outputs of lm_concat(parts) on s: each part transduced on its capture.
std::vector<Word> oracle_lm_concat(const std::vector<Fst>& parts,
                                   std::span<const Label> s);
TransductionOracle lm_concat_oracle(const std::vector<Fst>& parts);

// Left-to-right scan. At position p, when some suffix of the output so far
// is in Left and some x starting at p has x in domain(T) with a prefix of
// the input after x in Right, the longest such x is rewritten (an empty x
// only if no nonempty one qualifies and the previous match did not end at
// p; the next symbol is then copied).
// Otherwise one symbol is copied.
std::vector<Word> oracle_replace(const TransductionOracle& t, const Fst& left,
                                 const Fst& right, std::span<const Label> s,
                                 size_t limit = 1000);
std::vector<Word> oracle_replace(const ReplaceRule& rule,
                                 std::span<const Label> s, size_t limit = 1000);

// Random instances for the agreement suites. Transducers have 1..3 states,
// no input-epsilon arcs and a nonempty domain; contexts are unions of words
// of length <= 2.
struct RandomRule {
  ReplaceRule rule;
  std::string description;
};
Fst random_transducer(const SymbolTablePtr& symbols,
                      std::span<const Label> alphabet, std::mt19937_64& rng,
                      std::string* description = nullptr);
Fst random_context(const SymbolTablePtr& symbols,
                   std::span<const Label> alphabet, std::mt19937_64& rng,
                   std::string* description = nullptr);
RandomRule random_rule(const SymbolTablePtr& symbols,
                       std::span<const Label> alphabet, std::mt19937_64& rng);

struct Disagreement {
  Word input;
  std::vector<Word> compiled;
  std::vector<Word> expected;
};

// Runs `compiled` and the oracle on every word up to max_len and reports
// the first difference.
std::optional<Disagreement> compare_with_oracle(
    const Fst& compiled, const std::function<std::vector<Word>(std::span<const Label>)>& oracle,
    std::span<const Label> alphabet, int max_len, size_t limit = 1000);

// Reads the split points off a mark_boundaries output (flagged cells with
// lb1 after each part).
std::optional<std::vector<size_t>> read_split(const SymbolTable& symbols,
                                              std::span<const Label> marked);

std::string describe(const SymbolTable& symbols, const Disagreement& d);

}  // namespace fsrw

#endif  // FSRW_ORACLE_H_
