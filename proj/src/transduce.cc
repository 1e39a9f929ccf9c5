#include "fsrw/transduce.h"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_map>

#include "fsrw/algebra.h"
#include "fsrw/error.h"
#include "fsrw/optimize.h"

namespace fsrw {

namespace {

void enumerate_acyclic(const Fst& dfa, StateId s, Word& prefix, size_t limit,
                       TransduceResult& result) {
  if (result.truncated) return;
  if (dfa.is_final(s)) {
    if (result.outputs.size() == limit) {
      result.truncated = true;
      return;
    }
    result.outputs.push_back(prefix);
  }
  for (const Arc& a : dfa.arcs(s)) {
    prefix.push_back(a.in);
    enumerate_acyclic(dfa, a.next, prefix, limit, result);
    prefix.pop_back();
    if (result.truncated) return;
  }
}

}  // namespace

TransduceResult enumerate_language(const Fst& r, size_t limit) {
  if (limit == 0) throw StructuralError("output limit must be at least 1");
  Fst dfa = minimize(r, LabelMode::kLanguage);
  TransduceResult result;
  if (is_empty(dfa)) return result;
  if (!is_cyclic(dfa)) {
    Word prefix;
    enumerate_acyclic(dfa, dfa.initial(), prefix, limit, result);
    return result;
  }
  // Infinite: breadth-first (shortest first) until `limit` words are found.
  std::deque<std::pair<StateId, Word>> queue;
  queue.emplace_back(dfa.initial(), Word{});
  while (!queue.empty() && result.outputs.size() < limit) {
    auto [s, w] = std::move(queue.front());
    queue.pop_front();
    if (dfa.is_final(s)) result.outputs.push_back(w);
    for (const Arc& a : dfa.arcs(s)) {
      Word next = w;
      next.push_back(a.in);
      queue.emplace_back(a.next, std::move(next));
    }
  }
  result.truncated = true;
  std::sort(result.outputs.begin(), result.outputs.end());
  return result;
}

TransduceResult transduce(const Fst& t, std::span<const Label> input,
                          size_t limit) {
  if (limit == 0) throw StructuralError("output limit must be at least 1");
  // Product of `t` with the linear machine of `input`, read on the output
  // side only.
  const size_t n = input.size();
  Fst outputs(t.symbols());
  if (t.num_states() == 0) return {};
  std::unordered_map<uint64_t, StateId> ids;
  std::vector<std::pair<StateId, size_t>> queue;
  auto get = [&](StateId q, size_t i) {
    uint64_t key = (static_cast<uint64_t>(q) << 32) | i;
    auto [it, inserted] = ids.emplace(key, kNoState);
    if (inserted) {
      it->second = outputs.add_state();
      queue.emplace_back(q, i);
      if (i == n && t.is_final(q)) outputs.set_final(it->second);
    }
    return it->second;
  };
  get(t.initial(), 0);
  for (size_t k = 0; k < queue.size(); ++k) {
    auto [q, i] = queue[k];
    const StateId src = static_cast<StateId>(k);
    for (const Arc& a : t.arcs(q)) {
      if (a.in == kEpsilon) {
        outputs.add_arc(src, a.out, a.out, get(a.next, i));
      } else if (i < n && a.in == input[i]) {
        outputs.add_arc(src, a.out, a.out, get(a.next, i + 1));
      }
    }
  }
  return enumerate_language(outputs, limit);
}

TransduceResult transduce(const Fst& t, std::string_view input, size_t limit,
                          std::span<const std::string> tokens) {
  Word w = tokenize(*t.symbols(), input, tokens);
  return transduce(t, w, limit);
}

TransduceResult transduce_cascade(const std::vector<Fst>& factors,
                                  std::span<const Label> input, size_t limit) {
  if (factors.empty()) throw StructuralError("empty cascade");
  Fst current = word(factors[0].symbols(), input);
  for (const Fst& f : factors) {
    current = project(compose(current, f), Side::kRange);
  }
  return enumerate_language(current, limit);
}

std::vector<std::string> render_all(const SymbolTable& symbols,
                                    const TransduceResult& result) {
  std::vector<std::string> out;
  out.reserve(result.outputs.size());
  for (const Word& w : result.outputs) out.push_back(render(symbols, w));
  return out;
}

}  // namespace fsrw
