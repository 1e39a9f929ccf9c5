#include "fsrw/algebra.h"

#include <unordered_map>

#include "fsrw/error.h"
#include "fsrw/optimize.h"

namespace fsrw {

namespace {

// Copies `m` into `out`; returns the id offset of its states.
StateId append_copy(Fst& out, const Fst& m) {
  const StateId offset = out.num_states();
  out.add_states(m.num_states());
  for (StateId s = 0; s < m.num_states(); ++s) {
    if (m.is_final(s)) out.set_final(offset + s);
    for (const Arc& a : m.arcs(s)) {
      out.add_arc(offset + s, a.in, a.out, offset + a.next);
    }
  }
  return offset;
}

const SymbolTablePtr& common_table(const std::vector<Fst>& operands) {
  for (size_t i = 1; i < operands.size(); ++i) {
    require_same_table(operands[0], operands[i]);
  }
  return operands[0].symbols();
}

void require_recognizer(const Fst& m, const char* what) {
  if (!m.is_recognizer()) throw CoercionError(what);
}

void require_arity(const std::vector<Fst>& operands, size_t n, const char* op) {
  if (operands.size() != n) {
    throw StructuralError(std::string(op) + " takes " + std::to_string(n) +
                          " operand(s), got " +
                          std::to_string(operands.size()));
  }
}

}  // namespace

Fst empty_language(SymbolTablePtr symbols) {
  Fst out(std::move(symbols));
  out.add_state();
  return out;
}

Fst empty_string(SymbolTablePtr symbols) {
  Fst out(std::move(symbols));
  out.set_final(out.add_state());
  return out;
}

Fst symbol(SymbolTablePtr symbols, Label sym) {
  return symbol_pair(std::move(symbols), sym, sym);
}

Fst symbol_pair(SymbolTablePtr symbols, Label in, Label out_label) {
  Fst out(std::move(symbols));
  StateId s = out.add_state();
  StateId t = out.add_state();
  out.set_final(t);
  if (in == kEpsilon && out_label == kEpsilon) {
    out.set_final(s);
    return connect(out);
  }
  out.add_arc(s, in, out_label, t);
  return out;
}

Fst any_of(SymbolTablePtr symbols, std::span<const Label> alphabet) {
  Fst out(std::move(symbols));
  StateId s = out.add_state();
  StateId t = out.add_state();
  out.set_final(t);
  for (Label l : alphabet) out.add_arc(s, l, l, t);
  out.sort_arcs();
  return connect(out);
}

Fst word(SymbolTablePtr symbols, std::span<const Label> w) {
  Fst out(std::move(symbols));
  StateId s = out.add_state();
  for (Label l : w) {
    StateId t = out.add_state();
    out.add_arc(s, l, l, t);
    s = t;
  }
  out.set_final(s);
  return out;
}

Fst universal(SymbolTablePtr symbols) {
  Fst out(symbols);
  StateId s = out.add_state();
  out.set_final(s);
  for (Label l : symbols->symbols()) out.add_arc(s, l, l, s);
  return out;
}

// ---- Rational ----

Fst union_of(const std::vector<Fst>& operands) {
  if (operands.empty()) {
    throw StructuralError("union_of needs a symbol table; use empty_language");
  }
  Fst out(common_table(operands));
  StateId start = out.add_state();
  for (const Fst& m : operands) {
    if (m.num_states() == 0) continue;
    StateId offset = append_copy(out, m);
    out.add_arc(start, kEpsilon, kEpsilon, offset + m.initial());
  }
  return optimize(out);
}

Fst concat(const std::vector<Fst>& operands) {
  if (operands.empty()) {
    throw StructuralError("concat needs a symbol table; use empty_string");
  }
  Fst out(common_table(operands));
  StateId start = out.add_state();
  std::vector<StateId> tails{start};
  for (const Fst& m : operands) {
    if (m.num_states() == 0) return empty_language(out.symbols());
    StateId offset = append_copy(out, m);
    for (StateId t : tails) out.add_arc(t, kEpsilon, kEpsilon, offset + m.initial());
    tails.clear();
    for (StateId f : m.finals()) {
      tails.push_back(offset + f);
      out.set_final(offset + f, false);
    }
  }
  for (StateId t : tails) out.set_final(t);
  return optimize(out);
}

Fst star(const Fst& m) {
  Fst out(m.symbols());
  StateId start = out.add_state();
  out.set_final(start);
  if (m.num_states() > 0) {
    StateId offset = append_copy(out, m);
    out.add_arc(start, kEpsilon, kEpsilon, offset + m.initial());
    for (StateId f : m.finals()) out.add_arc(offset + f, kEpsilon, kEpsilon, start);
  }
  return optimize(out);
}

Fst plus(const Fst& m) {
  Fst out(m.symbols());
  StateId start = out.add_state();
  if (m.num_states() > 0) {
    StateId offset = append_copy(out, m);
    out.add_arc(start, kEpsilon, kEpsilon, offset + m.initial());
    for (StateId f : m.finals()) out.add_arc(offset + f, kEpsilon, kEpsilon, start);
    for (StateId f : m.finals()) out.set_final(offset + f);
  }
  return optimize(out);
}

Fst option(const Fst& m) {
  return union_of({m, empty_string(m.symbols())});
}

Fst rational_combine(RationalOp op, const std::vector<Fst>& operands) {
  switch (op) {
    case RationalOp::kUnion:
      return union_of(operands);
    case RationalOp::kConcat:
      return concat(operands);
    case RationalOp::kStar:
      require_arity(operands, 1, "star");
      return star(operands[0]);
    case RationalOp::kPlus:
      require_arity(operands, 1, "plus");
      return plus(operands[0]);
    case RationalOp::kOption:
      require_arity(operands, 1, "option");
      return option(operands[0]);
  }
  throw StructuralError("unknown rational operator");
}

// ---- Boolean ----

Fst complement(const Fst& m) {
  require_recognizer(m, "complement of transduction undefined");
  Fst dfa = determinize(m, LabelMode::kLanguage);
  const std::vector<Label> sigma = m.symbols()->symbols();
  const StateId sink = dfa.add_state();
  for (StateId s = 0; s < dfa.num_states(); ++s) {
    std::vector<char> has(sigma.size() + 1, 0);
    for (const Arc& a : dfa.arcs(s)) has[a.in] = 1;
    for (Label l : sigma) {
      if (!has[l]) dfa.add_arc(s, l, l, sink);
    }
    dfa.set_final(s, !dfa.is_final(s));
  }
  return minimize(dfa);
}

Fst intersect(const Fst& a, const Fst& b) {
  require_same_table(a, b);
  require_recognizer(a, "intersection of transduction undefined");
  require_recognizer(b, "intersection of transduction undefined");
  Fst x = rm_epsilon(a);
  Fst y = rm_epsilon(b);
  Fst out(a.symbols());
  std::unordered_map<uint64_t, StateId> ids;
  std::vector<std::pair<StateId, StateId>> queue;
  auto get = [&](StateId p, StateId q) {
    uint64_t key = (static_cast<uint64_t>(p) << 32) | static_cast<uint32_t>(q);
    auto [it, inserted] = ids.emplace(key, kNoState);
    if (inserted) {
      it->second = out.add_state();
      queue.emplace_back(p, q);
      if (x.is_final(p) && y.is_final(q)) out.set_final(it->second);
    }
    return it->second;
  };
  get(x.initial(), y.initial());
  for (size_t i = 0; i < queue.size(); ++i) {
    auto [p, q] = queue[i];
    const StateId src = static_cast<StateId>(i);
    for (const Arc& ea : x.arcs(p)) {
      for (const Arc& eb : y.arcs(q)) {
        if (ea.in == eb.in) {
          StateId dst = get(ea.next, eb.next);
          out.add_arc(src, ea.in, ea.in, dst);
        }
      }
    }
  }
  return minimize(out);
}

Fst difference(const Fst& a, const Fst& b) {
  require_recognizer(a, "difference of transduction undefined");
  require_recognizer(b, "difference of transduction undefined");
  return intersect(a, complement(b));
}

Fst contain(const Fst& m) {
  require_recognizer(m, "containment of transduction undefined");
  Fst any = universal(m.symbols());
  return concat({any, m, any});
}

Fst boolean_combine(BooleanOp op, const std::vector<Fst>& operands) {
  switch (op) {
    case BooleanOp::kComplement:
      require_arity(operands, 1, "complement");
      return complement(operands[0]);
    case BooleanOp::kDifference:
      require_arity(operands, 2, "difference");
      return difference(operands[0], operands[1]);
    case BooleanOp::kIntersection:
      require_arity(operands, 2, "intersection");
      return intersect(operands[0], operands[1]);
    case BooleanOp::kContainment:
      require_arity(operands, 1, "containment");
      return contain(operands[0]);
  }
  throw StructuralError("unknown boolean operator");
}

// ---- Relations ----

Fst cross_product(const Fst& a, const Fst& b) {
  require_same_table(a, b);
  require_recognizer(a, "cross-product operand must be a recognizer");
  require_recognizer(b, "cross-product operand must be a recognizer");
  Fst x = rm_epsilon(a);
  Fst y = rm_epsilon(b);
  // Mode 0 reads both sides in lockstep; mode 1 has finished `a` and
  // writes the rest of `b` (epsilon inputs); mode 2 the reverse.
  Fst out(a.symbols());
  std::unordered_map<uint64_t, StateId> ids;
  struct Triple {
    StateId p, q;
    int mode;
  };
  std::vector<Triple> queue;
  auto get = [&](StateId p, StateId q, int mode) {
    uint64_t key = (static_cast<uint64_t>(p) << 33) |
                   (static_cast<uint64_t>(q) << 2) | static_cast<uint64_t>(mode);
    auto [it, inserted] = ids.emplace(key, kNoState);
    if (inserted) {
      it->second = out.add_state();
      queue.push_back({p, q, mode});
      if (x.is_final(p) && y.is_final(q)) out.set_final(it->second);
    }
    return it->second;
  };
  get(x.initial(), y.initial(), 0);
  for (size_t i = 0; i < queue.size(); ++i) {
    const Triple t = queue[i];
    const StateId src = static_cast<StateId>(i);
    if (t.mode == 0) {
      for (const Arc& ea : x.arcs(t.p)) {
        for (const Arc& eb : y.arcs(t.q)) {
          out.add_arc(src, ea.in, eb.in, get(ea.next, eb.next, 0));
        }
      }
    }
    if ((t.mode == 0 || t.mode == 1) && x.is_final(t.p)) {
      for (const Arc& eb : y.arcs(t.q)) {
        out.add_arc(src, kEpsilon, eb.in, get(t.p, eb.next, 1));
      }
    }
    if ((t.mode == 0 || t.mode == 2) && y.is_final(t.q)) {
      for (const Arc& ea : x.arcs(t.p)) {
        out.add_arc(src, ea.in, kEpsilon, get(ea.next, t.q, 2));
      }
    }
  }
  return optimize(out);
}

Fst compose(const Fst& a, const Fst& b) {
  require_same_table(a, b);
  Fst out(a.symbols());
  if (a.num_states() == 0 || b.num_states() == 0) return empty_language(out.symbols());
  // Filter state f: 0 = free, 1 = last move was `b` alone, 2 = last move
  // was `a` alone. `a` alone is barred after `b` alone and vice versa;
  // simultaneous epsilon moves only from 0.
  std::unordered_map<uint64_t, StateId> ids;
  struct Triple {
    StateId p, q;
    int f;
  };
  std::vector<Triple> queue;
  auto get = [&](StateId p, StateId q, int f) {
    uint64_t key = (static_cast<uint64_t>(p) << 33) |
                   (static_cast<uint64_t>(q) << 2) | static_cast<uint64_t>(f);
    auto [it, inserted] = ids.emplace(key, kNoState);
    if (inserted) {
      it->second = out.add_state();
      queue.push_back({p, q, f});
      if (a.is_final(p) && b.is_final(q)) out.set_final(it->second);
    }
    return it->second;
  };
  // Arcs of `b` grouped by input label for matching.
  std::vector<std::unordered_map<Label, std::vector<const Arc*>>> b_index(
      b.num_states());
  for (StateId q = 0; q < b.num_states(); ++q) {
    for (const Arc& eb : b.arcs(q)) b_index[q][eb.in].push_back(&eb);
  }
  get(a.initial(), b.initial(), 0);
  for (size_t i = 0; i < queue.size(); ++i) {
    const Triple t = queue[i];
    const StateId src = static_cast<StateId>(i);
    const auto& bq = b_index[t.q];
    auto b_eps = bq.find(kEpsilon);
    for (const Arc& ea : a.arcs(t.p)) {
      if (ea.out == kEpsilon) {
        if (t.f != 1) out.add_arc(src, ea.in, kEpsilon, get(ea.next, t.q, 2));
        if (t.f == 0 && b_eps != bq.end()) {
          for (const Arc* eb : b_eps->second) {
            out.add_arc(src, ea.in, eb->out, get(ea.next, eb->next, 0));
          }
        }
      } else {
        auto it = bq.find(ea.out);
        if (it == bq.end()) continue;
        for (const Arc* eb : it->second) {
          out.add_arc(src, ea.in, eb->out, get(ea.next, eb->next, 0));
        }
      }
    }
    if (t.f != 2 && b_eps != bq.end()) {
      for (const Arc* eb : b_eps->second) {
        out.add_arc(src, kEpsilon, eb->out, get(t.p, eb->next, 1));
      }
    }
  }
  return optimize(out);
}

Fst compose_all(const std::vector<Fst>& chain) {
  if (chain.empty()) throw StructuralError("compose_all of an empty chain");
  Fst acc = chain[0];
  for (size_t i = 1; i < chain.size(); ++i) acc = compose(acc, chain[i]);
  return acc;
}

Fst project(const Fst& t, Side side) {
  Fst out = t;
  out.project_labels(side == Side::kDomain);
  return optimize(out);
}

Fst identity_lift(const Fst& r) {
  require_recognizer(r, "identity of a transduction is undefined");
  return optimize(r);
}

Fst invert(const Fst& t) {
  Fst out = t;
  out.invert_labels();
  return optimize(out);
}

}  // namespace fsrw
