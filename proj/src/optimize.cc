#include "fsrw/optimize.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "fsrw/error.h"

namespace fsrw {

namespace {

struct VectorHash {
  size_t operator()(const std::vector<StateId>& v) const {
    size_t h = v.size();
    for (StateId s : v) h = h * 1000003u ^ static_cast<size_t>(s);
    return h;
  }
};

struct SignatureHash {
  size_t operator()(const std::vector<uint64_t>& v) const {
    size_t h = v.size();
    for (uint64_t x : v) h = (h * 0x9E3779B97F4A7C15ull) ^ (x + (h >> 7));
    return h;
  }
};

Fst empty_machine(const SymbolTablePtr& symbols) {
  Fst out(symbols);
  out.add_state();
  return out;
}

std::vector<char> reachable(const Fst& m) {
  std::vector<char> seen(m.num_states(), 0);
  if (m.num_states() == 0) return seen;
  std::vector<StateId> stack{m.initial()};
  seen[m.initial()] = 1;
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    for (const Arc& a : m.arcs(s)) {
      if (!seen[a.next]) {
        seen[a.next] = 1;
        stack.push_back(a.next);
      }
    }
  }
  return seen;
}

std::vector<char> coreachable(const Fst& m) {
  const StateId n = m.num_states();
  std::vector<std::vector<StateId>> reverse(n);
  for (StateId s = 0; s < n; ++s) {
    for (const Arc& a : m.arcs(s)) reverse[a.next].push_back(s);
  }
  std::vector<char> seen(n, 0);
  std::vector<StateId> stack;
  for (StateId s = 0; s < n; ++s) {
    if (m.is_final(s)) {
      seen[s] = 1;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    for (StateId p : reverse[s]) {
      if (!seen[p]) {
        seen[p] = 1;
        stack.push_back(p);
      }
    }
  }
  return seen;
}

}  // namespace

Fst connect(const Fst& m) {
  if (m.num_states() == 0) return empty_machine(m.symbols());
  auto acc = reachable(m);
  auto coacc = coreachable(m);
  if (!coacc[m.initial()]) return empty_machine(m.symbols());
  std::vector<StateId> remap(m.num_states(), kNoState);
  Fst out(m.symbols());
  // Initial state first so that it keeps id 0.
  remap[m.initial()] = out.add_state();
  for (StateId s = 0; s < m.num_states(); ++s) {
    if (acc[s] && coacc[s] && remap[s] == kNoState) remap[s] = out.add_state();
  }
  out.set_initial(remap[m.initial()]);
  for (StateId s = 0; s < m.num_states(); ++s) {
    if (remap[s] == kNoState) continue;
    if (m.is_final(s)) out.set_final(remap[s]);
    for (const Arc& a : m.arcs(s)) {
      if (remap[a.next] != kNoState) out.add_arc(remap[s], a.in, a.out, remap[a.next]);
    }
  }
  return out;
}

Fst rm_epsilon(const Fst& m) {
  if (!m.has_epsilon_pairs()) return connect(m);
  const StateId n = m.num_states();
  Fst out(m.symbols());
  out.add_states(n);
  out.set_initial(m.initial());
  std::vector<StateId> mark(n, kNoState);
  std::vector<StateId> closure;
  std::vector<StateId> stack;
  for (StateId s = 0; s < n; ++s) {
    closure.assign(1, s);
    stack.assign(1, s);
    mark[s] = s;
    while (!stack.empty()) {
      StateId t = stack.back();
      stack.pop_back();
      for (const Arc& a : m.arcs(t)) {
        if (a.in == kEpsilon && a.out == kEpsilon && mark[a.next] != s) {
          mark[a.next] = s;
          closure.push_back(a.next);
          stack.push_back(a.next);
        }
      }
    }
    for (StateId t : closure) {
      if (m.is_final(t)) out.set_final(s);
      for (const Arc& a : m.arcs(t)) {
        if (a.in != kEpsilon || a.out != kEpsilon) out.add_arc(s, a);
      }
    }
  }
  out.sort_arcs();
  return connect(out);
}

Fst determinize(const Fst& m, LabelMode mode) {
  if (mode == LabelMode::kLanguage && !m.is_recognizer()) {
    throw StructuralError(
        "determinize of a transducer requires pair-atomic mode");
  }
  Fst in = rm_epsilon(m);
  Fst out(in.symbols());
  std::unordered_map<std::vector<StateId>, StateId, VectorHash> ids;
  std::vector<std::vector<StateId>> subsets;
  subsets.push_back({in.initial()});
  ids.emplace(subsets[0], out.add_state());
  std::vector<std::pair<uint64_t, StateId>> moves;
  for (size_t i = 0; i < subsets.size(); ++i) {
    const std::vector<StateId> subset = subsets[i];
    const StateId src = static_cast<StateId>(i);
    moves.clear();
    for (StateId s : subset) {
      if (in.is_final(s)) out.set_final(src);
      for (const Arc& a : in.arcs(s)) moves.emplace_back(label_key(a), a.next);
    }
    std::sort(moves.begin(), moves.end());
    moves.erase(std::unique(moves.begin(), moves.end()), moves.end());
    for (size_t j = 0; j < moves.size();) {
      size_t k = j;
      std::vector<StateId> target;
      while (k < moves.size() && moves[k].first == moves[j].first) {
        target.push_back(moves[k].second);
        ++k;
      }
      auto [it, inserted] = ids.emplace(target, kNoState);
      if (inserted) {
        it->second = out.add_state();
        subsets.push_back(target);
      }
      const uint64_t key = moves[j].first;
      out.add_arc(src, static_cast<Label>(key >> 32),
                  static_cast<Label>(key & 0xFFFFFFFFu), it->second);
      j = k;
    }
  }
  return out;
}

bool is_deterministic(const Fst& m) {
  for (StateId s = 0; s < m.num_states(); ++s) {
    std::vector<uint64_t> keys;
    for (const Arc& a : m.arcs(s)) {
      if (a.in == kEpsilon && a.out == kEpsilon) return false;
      keys.push_back(label_key(a));
    }
    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) return false;
  }
  return true;
}

Fst minimize(const Fst& m, LabelMode mode) {
  if (mode == LabelMode::kLanguage && !m.is_recognizer()) {
    throw StructuralError("minimize of a transducer requires pair-atomic mode");
  }
  Fst dfa = is_deterministic(m) ? connect(m) : connect(determinize(m, mode));
  dfa.sort_arcs();
  const StateId n = dfa.num_states();

  // Moore refinement on the trimmed partial DFA: every remaining state is
  // live, so a missing arc never matches a present one.
  std::vector<StateId> cls(n);
  for (StateId s = 0; s < n; ++s) cls[s] = dfa.is_final(s) ? 1 : 0;
  StateId num_classes = -1;
  std::vector<std::vector<uint64_t>> sig(n);
  while (true) {
    for (StateId s = 0; s < n; ++s) {
      auto& v = sig[s];
      v.clear();
      v.push_back(static_cast<uint64_t>(cls[s]));
      for (const Arc& a : dfa.arcs(s)) {
        v.push_back(label_key(a));
        v.push_back(static_cast<uint64_t>(cls[a.next]));
      }
    }
    std::unordered_map<std::vector<uint64_t>, StateId, SignatureHash> index;
    std::vector<StateId> next(n);
    for (StateId s = 0; s < n; ++s) {
      auto [it, inserted] =
          index.emplace(sig[s], static_cast<StateId>(index.size()));
      next[s] = it->second;
    }
    const StateId count = static_cast<StateId>(index.size());
    cls.swap(next);
    if (count == num_classes) break;
    num_classes = count;
  }

  Fst out(dfa.symbols());
  out.add_states(num_classes);
  out.set_initial(cls[dfa.initial()]);
  std::vector<char> done(num_classes, 0);
  for (StateId s = 0; s < n; ++s) {
    const StateId c = cls[s];
    if (done[c]) continue;
    done[c] = 1;
    if (dfa.is_final(s)) out.set_final(c);
    for (const Arc& a : dfa.arcs(s)) out.add_arc(c, a.in, a.out, cls[a.next]);
  }
  return canonicalize(out);
}

Fst canonicalize(const Fst& m) {
  if (m.num_states() == 0) return empty_machine(m.symbols());
  std::vector<StateId> remap(m.num_states(), kNoState);
  std::vector<StateId> order{m.initial()};
  remap[m.initial()] = 0;
  for (size_t i = 0; i < order.size(); ++i) {
    std::vector<Arc> arcs(m.arcs(order[i]).begin(), m.arcs(order[i]).end());
    std::sort(arcs.begin(), arcs.end());
    for (const Arc& a : arcs) {
      if (remap[a.next] == kNoState) {
        remap[a.next] = static_cast<StateId>(order.size());
        order.push_back(a.next);
      }
    }
  }
  Fst out(m.symbols());
  out.add_states(static_cast<StateId>(order.size()));
  out.set_initial(0);
  for (size_t i = 0; i < order.size(); ++i) {
    const StateId s = order[i];
    if (m.is_final(s)) out.set_final(static_cast<StateId>(i));
    for (const Arc& a : m.arcs(s)) {
      out.add_arc(static_cast<StateId>(i), a.in, a.out, remap[a.next]);
    }
  }
  out.sort_arcs();
  return out;
}

Fst optimize(const Fst& m) {
  return minimize(m, m.is_recognizer() ? LabelMode::kLanguage
                                       : LabelMode::kPairAtomic);
}

bool identical(const Fst& a, const Fst& b) {
  if (a.num_states() != b.num_states() || a.initial() != b.initial()) {
    return false;
  }
  for (StateId s = 0; s < a.num_states(); ++s) {
    if (a.is_final(s) != b.is_final(s)) return false;
    auto x = a.arcs(s);
    auto y = b.arcs(s);
    if (!std::equal(x.begin(), x.end(), y.begin(), y.end())) return false;
  }
  return true;
}

bool equivalent(const Fst& a, const Fst& b) {
  require_same_table(a, b);
  return identical(minimize(a, LabelMode::kPairAtomic),
                   minimize(b, LabelMode::kPairAtomic));
}

bool is_empty(const Fst& m) {
  auto seen = reachable(m);
  for (StateId s = 0; s < m.num_states(); ++s) {
    if (seen[s] && m.is_final(s)) return false;
  }
  return true;
}

bool is_cyclic(const Fst& m) {
  Fst t = rm_epsilon(m);
  // Iterative three-colour DFS over the trimmed machine.
  const StateId n = t.num_states();
  std::vector<char> colour(n, 0);
  std::vector<std::pair<StateId, size_t>> stack;
  for (StateId root = 0; root < n; ++root) {
    if (colour[root]) continue;
    stack.emplace_back(root, 0);
    colour[root] = 1;
    while (!stack.empty()) {
      auto& [s, i] = stack.back();
      auto arcs = t.arcs(s);
      if (i < arcs.size()) {
        StateId next = arcs[i++].next;
        if (colour[next] == 1) return true;
        if (colour[next] == 0) {
          colour[next] = 1;
          stack.emplace_back(next, 0);
        }
      } else {
        colour[s] = 2;
        stack.pop_back();
      }
    }
  }
  return false;
}

}  // namespace fsrw
