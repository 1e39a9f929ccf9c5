#ifndef FSRW_TESTS_TEST_SUPPORT_H_
#define FSRW_TESTS_TEST_SUPPORT_H_

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fsrw/algebra.h"
#include "fsrw/compiler.h"
#include "fsrw/macro_expander.h"
#include "fsrw/oracle.h"
#include "fsrw/parser.h"
#include "fsrw/transduce.h"

namespace fsrw::testing {

// A table with user symbols a b c (plus the reserved six).
inline SymbolTablePtr abc_table(std::vector<std::string> extra = {}) {
  auto t = SymbolTable::create();
  for (const char* g : {"a", "b", "c"}) t->add_user_symbol(g);
  for (const auto& g : extra) t->add_user_symbol(g);
  return t;
}

// Compiles one expression over an existing table.
inline Fst expr(const SymbolTablePtr& symbols, std::string_view text) {
  RuleProgram p;
  p.main = parse_expression(text);
  return compile_program(expand_macros(p), symbols);
}

inline Word w(const SymbolTablePtr& symbols, std::string_view text) {
  return tokenize(*symbols, text);
}

inline std::vector<std::string> outs(const Fst& t, std::string_view input,
                                     size_t limit = 1000) {
  return render_all(*t.symbols(), transduce(t, input, limit));
}

inline std::vector<std::string> strings(const SymbolTable& symbols,
                                        const std::vector<Word>& words) {
  std::vector<std::string> r;
  for (const Word& x : words) r.push_back(render(symbols, x));
  return r;
}

inline std::vector<Label> ids(const SymbolTablePtr& symbols,
                              std::initializer_list<std::string_view> glyphs) {
  std::vector<Label> r;
  for (auto g : glyphs) r.push_back(symbols->find(g));
  return r;
}

// Random NFA over `alphabet` with epsilon arcs; the epsilon graph is
// acyclic (epsilon arcs only go to higher-numbered states).
inline Fst random_nfa(const SymbolTablePtr& symbols,
                      std::span<const Label> alphabet, int states,
                      std::mt19937_64& rng) {
  std::bernoulli_distribution eps(0.15), fin(0.35);
  Fst m(symbols);
  m.add_states(states);
  m.set_initial(0);
  for (int s = 0; s < states; ++s) {
    if (fin(rng)) m.set_final(s);
    for (Label x : alphabet) {
      for (int d = 0; d < states; ++d) {
        if (std::bernoulli_distribution(1.2 / states)(rng)) m.add_arc(s, x, x, d);
      }
    }
    for (int d = s + 1; d < states; ++d) {
      if (eps(rng)) m.add_arc(s, kEpsilon, kEpsilon, d);
    }
  }
  return m;
}

// Random transducer: arbitrary label pairs including input epsilons, which
// only go forward so every input has finitely many outputs.
inline Fst random_fst(const SymbolTablePtr& symbols,
                      std::span<const Label> alphabet, int states,
                      std::mt19937_64& rng) {
  std::vector<Label> side(alphabet.begin(), alphabet.end());
  side.push_back(kEpsilon);
  std::uniform_int_distribution<size_t> pick(0, side.size() - 1);
  std::uniform_int_distribution<int> to(0, states - 1);
  std::bernoulli_distribution fin(0.4);
  Fst m(symbols);
  m.add_states(states);
  m.set_initial(0);
  for (int s = 0; s < states; ++s) {
    if (fin(rng)) m.set_final(s);
    const int n = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int k = 0; k < n; ++k) {
      Label in = side[pick(rng)], out = side[pick(rng)];
      int d = to(rng);
      if (in == kEpsilon) {
        if (s + 1 >= states) continue;
        d = std::uniform_int_distribution<int>(s + 1, states - 1)(rng);
      }
      m.add_arc(s, in, out, d);
    }
  }
  if (m.finals().empty()) m.set_final(states - 1);
  return m;
}

inline std::set<Word> as_set(const std::vector<Word>& v) {
  return std::set<Word>(v.begin(), v.end());
}

}  // namespace fsrw::testing

#endif  // FSRW_TESTS_TEST_SUPPORT_H_
