#ifndef FSRW_FST_H_
#define FSRW_FST_H_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fsrw/symbol_table.h"

namespace fsrw {

using StateId = int32_t;
inline constexpr StateId kNoState = -1;

struct Arc {
  Label in = kEpsilon;
  Label out = kEpsilon;
  StateId next = kNoState;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Both sides of a label packed into one key; the pair-atomic alphabet.
inline uint64_t label_key(Label in, Label out) {
  return (static_cast<uint64_t>(static_cast<uint32_t>(in)) << 32) |
         static_cast<uint32_t>(out);
}
inline uint64_t label_key(const Arc& a) { return label_key(a.in, a.out); }

// Unweighted finite-state transducer over pairs of symbols, either side of
// which may be epsilon. A machine whose every arc has in == out is a
// recognizer and denotes a language (as an identity relation).
//
// A machine without states denotes the empty relation.
class Fst {
 public:
  explicit Fst(SymbolTablePtr symbols);

  const SymbolTablePtr& symbols() const { return symbols_; }

  StateId add_state();
  void add_states(StateId n);
  StateId num_states() const { return static_cast<StateId>(arcs_.size()); }

  StateId initial() const { return initial_; }
  void set_initial(StateId s);

  bool is_final(StateId s) const { return final_[s] != 0; }
  void set_final(StateId s, bool final = true);
  std::vector<StateId> finals() const;

  void add_arc(StateId src, Label in, Label out, StateId dst);
  void add_arc(StateId src, const Arc& arc) {
    add_arc(src, arc.in, arc.out, arc.next);
  }
  std::span<const Arc> arcs(StateId s) const { return arcs_[s]; }
  size_t num_arcs() const;

  // Sorts every state's arcs by (in, out, next) and drops duplicates.
  void sort_arcs();

  bool is_recognizer() const { return recognizer_; }
  bool has_epsilon_pairs() const;

  // Replaces both sides of every arc by its input (domain) or output (range).
  void project_labels(bool keep_input);
  void invert_labels();

 private:
  SymbolTablePtr symbols_;
  std::vector<std::vector<Arc>> arcs_;
  std::vector<char> final_;
  StateId initial_ = kNoState;
  bool recognizer_ = true;
};

// Throws StructuralError unless `a` and `b` share one symbol table.
void require_same_table(const Fst& a, const Fst& b);

// Membership of a symbol sequence in the input side (for recognizers: the
// language). Simulates the machine directly; epsilon-input arcs are closed
// over.
bool accepts(const Fst& m, std::span<const Label> input);

// Splits `text` into symbol ids using the table: multi-character glyphs in
// `tokens` are matched longest first, everything else is one UTF-8 code
// point per symbol. Throws UnknownSymbolError.
std::vector<Label> tokenize(const SymbolTable& symbols, std::string_view text,
                            std::span<const std::string> tokens = {});

// Joins glyphs without separators.
std::string render(const SymbolTable& symbols, std::span<const Label> word);

}  // namespace fsrw

#endif  // FSRW_FST_H_
