#include "fsrw/oracle.h"

#include <algorithm>
#include <set>
#include <tuple>

#include "fsrw/algebra.h"

namespace fsrw {

namespace {

using StateSet = std::vector<StateId>;

// Input-epsilon closure, then sorted.
void close(const Fst& m, StateSet& states) {
  std::vector<char> seen(m.num_states(), 0);
  for (StateId s : states) seen[s] = 1;
  for (size_t i = 0; i < states.size(); ++i) {
    for (const Arc& a : m.arcs(states[i])) {
      if (a.in == kEpsilon && !seen[a.next]) {
        seen[a.next] = 1;
        states.push_back(a.next);
      }
    }
  }
  std::sort(states.begin(), states.end());
}

StateSet step(const Fst& m, const StateSet& from, Label sym) {
  StateSet next;
  for (StateId s : from) {
    for (const Arc& a : m.arcs(s)) {
      if (a.in == sym) next.push_back(a.next);
    }
  }
  std::sort(next.begin(), next.end());
  next.erase(std::unique(next.begin(), next.end()), next.end());
  close(m, next);
  return next;
}

bool any_final(const Fst& m, const StateSet& states) {
  return std::any_of(states.begin(), states.end(),
                     [&](StateId s) { return m.is_final(s); });
}

void enumerate(const Fst& m, std::span<const Label> alphabet, int max_len,
               const StateSet& states, Word& prefix, std::vector<Word>& out) {
  if (any_final(m, states)) out.push_back(prefix);
  if (static_cast<int>(prefix.size()) == max_len) return;
  for (Label sym : alphabet) {
    StateSet next = step(m, states, sym);
    if (next.empty()) continue;
    prefix.push_back(sym);
    enumerate(m, alphabet, max_len, next, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Word> all_words(std::span<const Label> alphabet, int max_len) {
  std::vector<Word> out{Word{}};
  size_t level_start = 0;
  for (int len = 1; len <= max_len; ++len) {
    const size_t level_end = out.size();
    for (size_t i = level_start; i < level_end; ++i) {
      for (Label sym : alphabet) {
        Word w = out[i];
        w.push_back(sym);
        out.push_back(std::move(w));
      }
    }
    level_start = level_end;
  }
  return out;
}

std::vector<Word> oracle_language(const Fst& m, int max_len) {
  const std::vector<Label> all = m.symbols()->symbols();
  return oracle_language(m, all, max_len);
}

std::vector<Word> oracle_language(const Fst& m, std::span<const Label> alphabet,
                                  int max_len) {
  std::vector<Word> out;
  if (m.num_states() == 0) return out;
  std::vector<Label> sorted(alphabet.begin(), alphabet.end());
  std::sort(sorted.begin(), sorted.end());
  StateSet start{m.initial()};
  close(m, start);
  Word prefix;
  enumerate(m, sorted, max_len, start, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> oracle_outputs(const Fst& t, std::span<const Label> input,
                                 size_t max_output) {
  std::set<Word> out;
  if (t.num_states() == 0) return {};
  using Config = std::tuple<StateId, size_t, Word>;
  std::set<Config> seen;
  std::vector<Config> stack{{t.initial(), 0, {}}};
  while (!stack.empty()) {
    Config c = std::move(stack.back());
    stack.pop_back();
    if (!seen.insert(c).second) continue;
    const auto& [state, pos, produced] = c;
    if (pos == input.size() && t.is_final(state)) out.insert(produced);
    for (const Arc& a : t.arcs(state)) {
      size_t next_pos = pos;
      if (a.in != kEpsilon) {
        if (pos == input.size() || input[pos] != a.in) continue;
        ++next_pos;
      }
      Word w = produced;
      if (a.out != kEpsilon) {
        if (w.size() >= max_output) continue;
        w.push_back(a.out);
      }
      stack.emplace_back(a.next, next_pos, std::move(w));
    }
  }
  return {out.begin(), out.end()};
}

TransductionOracle machine_oracle(const Fst& t) {
  return TransductionOracle{
      [t](std::span<const Label> x) { return accepts(t, x); },
      [t](std::span<const Label> x) { return oracle_outputs(t, x); }};
}

namespace {

std::optional<std::vector<size_t>> split_from(const std::vector<Fst>& domains,
                                              std::span<const Label> s,
                                              size_t part, size_t pos) {
  if (part == domains.size()) {
    if (pos == s.size()) return std::vector<size_t>{};
    return std::nullopt;
  }
  for (size_t end = s.size() + 1; end-- > pos;) {
    if (!accepts(domains[part], s.subspan(pos, end - pos))) continue;
    auto rest = split_from(domains, s, part + 1, end);
    if (rest) {
      rest->insert(rest->begin(), end);
      return rest;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<size_t>> oracle_lm_split(
    const std::vector<Fst>& domains, std::span<const Label> s) {
  return split_from(domains, s, 0, 0);
}

std::vector<Word> oracle_lm_concat(const std::vector<Fst>& parts,
                                   std::span<const Label> s) {
  auto split = oracle_lm_split(parts, s);
  if (!split) return {};
  std::set<Word> acc{Word{}};
  size_t start = 0;
  for (size_t i = 0; i < parts.size(); ++i) {
    const size_t end = (*split)[i];
    std::set<Word> next;
    for (const Word& y : oracle_outputs(parts[i], s.subspan(start, end - start))) {
      for (const Word& prefix : acc) {
        Word w = prefix;
        w.insert(w.end(), y.begin(), y.end());
        next.insert(std::move(w));
      }
    }
    acc = std::move(next);
    start = end;
  }
  return {acc.begin(), acc.end()};
}

TransductionOracle lm_concat_oracle(const std::vector<Fst>& parts) {
  return TransductionOracle{
      [parts](std::span<const Label> x) {
        return oracle_lm_split(parts, x).has_value();
      },
      [parts](std::span<const Label> x) { return oracle_lm_concat(parts, x); }};
}

namespace {

class ReplaceScan {
 public:
  ReplaceScan(const TransductionOracle& t, const Fst& left, const Fst& right,
              std::span<const Label> s, size_t limit)
      : t_(t), left_(left), right_(right), s_(s), limit_(limit) {}

  std::vector<Word> run() {
    Word out;
    scan(0, out, false);
    return {results_.begin(), results_.end()};
  }

 private:
  bool left_holds(const Word& out) const {
    for (size_t k = 0; k <= out.size(); ++k) {
      if (accepts(left_, std::span<const Label>(out).subspan(k))) return true;
    }
    return false;
  }

  bool right_holds(size_t q) const {
    for (size_t k = q; k <= s_.size(); ++k) {
      if (accepts(right_, s_.subspan(q, k - q))) return true;
    }
    return false;
  }

  void emit_then(const std::vector<Word>& ys, const Word& out, size_t next,
                 bool copy_one) {
    for (const Word& y : ys) {
      Word w = out;
      w.insert(w.end(), y.begin(), y.end());
      if (copy_one) {
        if (next == s_.size()) {
          finish(std::move(w));
          continue;
        }
        w.push_back(s_[next]);
        scan(next + 1, w, false);
      } else {
        scan(next, w, true);
      }
    }
  }

  void finish(Word w) {
    if (results_.size() < limit_) results_.insert(std::move(w));
  }

  // An empty match is not tried where the previous match ended.
  void scan(size_t p, const Word& out, bool after_match) {
    if (results_.size() >= limit_) return;
    if (left_holds(out)) {
      for (size_t q = s_.size(); q > p; --q) {
        auto x = s_.subspan(p, q - p);
        if (t_.in_domain(x) && right_holds(q)) {
          emit_then(t_.outputs(x), out, q, false);
          return;
        }
      }
      if (!after_match && t_.in_domain({}) && right_holds(p)) {
        emit_then(t_.outputs({}), out, p, true);
        return;
      }
    }
    if (p == s_.size()) {
      finish(out);
      return;
    }
    Word w = out;
    w.push_back(s_[p]);
    scan(p + 1, w, false);
  }

  const TransductionOracle& t_;
  const Fst& left_;
  const Fst& right_;
  std::span<const Label> s_;
  size_t limit_;
  std::set<Word> results_;
};

}  // namespace

std::vector<Word> oracle_replace(const TransductionOracle& t, const Fst& left,
                                 const Fst& right, std::span<const Label> s,
                                 size_t limit) {
  return ReplaceScan(t, left, right, s, limit).run();
}

std::vector<Word> oracle_replace(const ReplaceRule& rule,
                                 std::span<const Label> s, size_t limit) {
  return oracle_replace(machine_oracle(rule.transducer), rule.left, rule.right,
                        s, limit);
}

Fst random_transducer(const SymbolTablePtr& symbols,
                      std::span<const Label> alphabet, std::mt19937_64& rng,
                      std::string* description) {
  auto chance = [&](double p) { return std::bernoulli_distribution(p)(rng); };
  auto pick = [&](size_t n) {
    return std::uniform_int_distribution<size_t>(0, n - 1)(rng);
  };
  const std::vector<Word> probes = all_words(alphabet, 4);
  for (;;) {
    Fst t(symbols);
    const StateId n = static_cast<StateId>(1 + pick(3));
    t.add_states(n);
    std::string desc = "T{states=" + std::to_string(n) + " final={";
    bool any = false;
    for (StateId s = 0; s < n; ++s) {
      if (chance(s == 0 ? 0.25 : 0.6)) {
        t.set_final(s);
        desc += (any ? "," : "") + std::to_string(s);
        any = true;
      }
    }
    desc += "}";
    if (!any) continue;
    for (StateId s = 0; s < n; ++s) {
      for (Label in : alphabet) {
        int arcs = chance(0.55) ? (chance(0.15) ? 2 : 1) : 0;
        for (int k = 0; k < arcs; ++k) {
          const Label out = chance(0.2) ? kEpsilon : alphabet[pick(alphabet.size())];
          const StateId dst = static_cast<StateId>(pick(n));
          t.add_arc(s, in, out, dst);
          desc += " " + std::to_string(s) + ">" + std::to_string(dst) + " " +
                  symbols->glyph(in) + ":" +
                  (out == kEpsilon ? std::string("[]") : symbols->glyph(out));
        }
      }
    }
    desc += "}";
    const bool nonempty = std::any_of(probes.begin(), probes.end(),
                                      [&](const Word& w) { return accepts(t, w); });
    if (!nonempty) continue;
    t.sort_arcs();
    if (description) *description = desc;
    return t;
  }
}

Fst random_context(const SymbolTablePtr& symbols,
                   std::span<const Label> alphabet, std::mt19937_64& rng,
                   std::string* description) {
  auto chance = [&](double p) { return std::bernoulli_distribution(p)(rng); };
  auto pick = [&](size_t n) {
    return std::uniform_int_distribution<size_t>(0, n - 1)(rng);
  };
  if (chance(0.4)) {
    if (description) *description = "[]";
    return empty_string(symbols);
  }
  const size_t words = 1 + pick(2);
  std::vector<Fst> alts;
  std::string desc = "{";
  for (size_t i = 0; i < words; ++i) {
    Word w;
    const size_t len = 1 + pick(2);
    for (size_t k = 0; k < len; ++k) w.push_back(alphabet[pick(alphabet.size())]);
    alts.push_back(word(symbols, w));
    desc += i ? ",[" : "[";
    for (size_t k = 0; k < w.size(); ++k) {
      desc += (k ? "," : "") + ("'" + symbols->glyph(w[k]) + "'");
    }
    desc += "]";
  }
  if (description) *description = desc + "}";
  return union_of(alts);
}

RandomRule random_rule(const SymbolTablePtr& symbols,
                       std::span<const Label> alphabet, std::mt19937_64& rng) {
  std::string t_desc, l_desc, r_desc;
  Fst t = random_transducer(symbols, alphabet, rng, &t_desc);
  Fst left = random_context(symbols, alphabet, rng, &l_desc);
  Fst right = random_context(symbols, alphabet, rng, &r_desc);
  return RandomRule{ReplaceRule{std::move(t), std::move(left), std::move(right)},
                    "replace(" + t_desc + ", " + l_desc + ", " + r_desc + ")"};
}

std::optional<Disagreement> compare_with_oracle(
    const Fst& compiled,
    const std::function<std::vector<Word>(std::span<const Label>)>& oracle,
    std::span<const Label> alphabet, int max_len, size_t limit) {
  for (const Word& w : all_words(alphabet, max_len)) {
    TransduceResult got = transduce(compiled, w, limit);
    std::vector<Word> want = oracle(w);
    if (got.outputs != want) {
      return Disagreement{w, std::move(got.outputs), std::move(want)};
    }
  }
  return std::nullopt;
}

std::optional<std::vector<size_t>> read_split(const SymbolTable& symbols,
                                              std::span<const Label> marked) {
  if (marked.size() % 2) return std::nullopt;
  std::vector<size_t> split;
  size_t cells = 0;
  for (size_t i = 0; i < marked.size(); i += 2) {
    const Label glyph = marked[i];
    const Label flag = marked[i + 1];
    if (flag == symbols.flag0()) {
      ++cells;
    } else if (flag == symbols.flag1() && glyph == symbols.lb1()) {
      split.push_back(cells);
    } else {
      return std::nullopt;
    }
  }
  return split;
}

std::string describe(const SymbolTable& symbols, const Disagreement& d) {
  auto set = [&](const std::vector<Word>& ws) {
    std::string out = "{";
    for (size_t i = 0; i < ws.size(); ++i) {
      out += (i ? ", \"" : "\"") + render(symbols, ws[i]) + "\"";
    }
    return out + "}";
  };
  return "input \"" + render(symbols, d.input) + "\": compiled " +
         set(d.compiled) + ", oracle " + set(d.expected);
}

}  // namespace fsrw
