#ifndef FSRW_TRANSDUCE_H_
#define FSRW_TRANSDUCE_H_

#include <span>
#include <string>
#include <vector>

#include "fsrw/fst.h"

namespace fsrw {

using Word = std::vector<Label>;

struct TransduceResult {
  // Sorted lexicographically by symbol id.
  std::vector<Word> outputs;
  // More outputs exist than were returned. For an infinite output set the
  // returned words are the `limit` shortest (ties by symbol id).
  bool truncated = false;
};

// Every y with (input, y) in t.
TransduceResult transduce(const Fst& t, std::span<const Label> input,
                          size_t limit = 1000);

// Tokenizes `input` with the machine's table first (per character, plus
// multi-character `tokens`). Throws UnknownSymbolError.
TransduceResult transduce(const Fst& t, std::string_view input,
                          size_t limit = 1000,
                          std::span<const std::string> tokens = {});

// Applies the machines in sequence without pre-composing them.
TransduceResult transduce_cascade(const std::vector<Fst>& factors,
                                  std::span<const Label> input,
                                  size_t limit = 1000);

// Words of a recognizer, in lexicographic order; at most `limit`.
TransduceResult enumerate_language(const Fst& r, size_t limit);

std::vector<std::string> render_all(const SymbolTable& symbols,
                                    const TransduceResult& result);

}  // namespace fsrw

#endif  // FSRW_TRANSDUCE_H_
