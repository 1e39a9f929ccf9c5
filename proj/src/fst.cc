#include "fsrw/fst.h"

#include <algorithm>

#include "fsrw/error.h"

namespace fsrw {

Fst::Fst(SymbolTablePtr symbols) : symbols_(std::move(symbols)) {
  if (!symbols_) throw StructuralError("machine requires a symbol table");
}

StateId Fst::add_state() {
  arcs_.emplace_back();
  final_.push_back(0);
  if (initial_ == kNoState) initial_ = 0;
  return num_states() - 1;
}

void Fst::add_states(StateId n) {
  arcs_.resize(arcs_.size() + n);
  final_.resize(final_.size() + n, 0);
  if (initial_ == kNoState && !arcs_.empty()) initial_ = 0;
}

void Fst::set_initial(StateId s) {
  if (s < 0 || s >= num_states()) {
    throw StructuralError("initial state out of range");
  }
  initial_ = s;
}

void Fst::set_final(StateId s, bool final) {
  if (s < 0 || s >= num_states()) {
    throw StructuralError("final state out of range");
  }
  final_[s] = final ? 1 : 0;
}

std::vector<StateId> Fst::finals() const {
  std::vector<StateId> out;
  for (StateId s = 0; s < num_states(); ++s) {
    if (final_[s]) out.push_back(s);
  }
  return out;
}

void Fst::add_arc(StateId src, Label in, Label out, StateId dst) {
  if (src < 0 || src >= num_states() || dst < 0 || dst >= num_states()) {
    throw StructuralError("arc endpoint out of range");
  }
  if (in < 0 || out < 0) throw StructuralError("negative label");
  if (in != out) recognizer_ = false;
  arcs_[src].push_back(Arc{in, out, dst});
}

size_t Fst::num_arcs() const {
  size_t n = 0;
  for (const auto& v : arcs_) n += v.size();
  return n;
}

void Fst::sort_arcs() {
  for (auto& v : arcs_) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
}

bool Fst::has_epsilon_pairs() const {
  for (const auto& v : arcs_) {
    for (const Arc& a : v) {
      if (a.in == kEpsilon && a.out == kEpsilon) return true;
    }
  }
  return false;
}

void Fst::project_labels(bool keep_input) {
  for (auto& v : arcs_) {
    for (Arc& a : v) {
      if (keep_input) {
        a.out = a.in;
      } else {
        a.in = a.out;
      }
    }
  }
  recognizer_ = true;
}

void Fst::invert_labels() {
  for (auto& v : arcs_) {
    for (Arc& a : v) std::swap(a.in, a.out);
  }
}

void require_same_table(const Fst& a, const Fst& b) {
  if (a.symbols() != b.symbols()) {
    throw StructuralError("operands use different symbol tables");
  }
}

namespace {

void input_epsilon_closure(const Fst& m, std::vector<StateId>& set,
                           std::vector<char>& mark) {
  std::vector<StateId> stack(set.begin(), set.end());
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    for (const Arc& a : m.arcs(s)) {
      if (a.in == kEpsilon && !mark[a.next]) {
        mark[a.next] = 1;
        set.push_back(a.next);
        stack.push_back(a.next);
      }
    }
  }
}

}  // namespace

bool accepts(const Fst& m, std::span<const Label> input) {
  if (m.num_states() == 0) return false;
  std::vector<char> mark(m.num_states(), 0);
  std::vector<StateId> current{m.initial()};
  mark[m.initial()] = 1;
  input_epsilon_closure(m, current, mark);
  for (Label sym : input) {
    std::fill(mark.begin(), mark.end(), 0);
    std::vector<StateId> next;
    for (StateId s : current) {
      for (const Arc& a : m.arcs(s)) {
        if (a.in == sym && !mark[a.next]) {
          mark[a.next] = 1;
          next.push_back(a.next);
        }
      }
    }
    if (next.empty()) return false;
    input_epsilon_closure(m, next, mark);
    current = std::move(next);
  }
  for (StateId s : current) {
    if (m.is_final(s)) return true;
  }
  return false;
}

namespace {

size_t utf8_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead >> 5) == 0x6) return 2;
  if ((lead >> 4) == 0xE) return 3;
  if ((lead >> 3) == 0x1E) return 4;
  return 1;
}

}  // namespace

std::vector<Label> tokenize(const SymbolTable& symbols, std::string_view text,
                            std::span<const std::string> tokens) {
  std::vector<Label> out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t best = 0;
    for (const std::string& t : tokens) {
      if (t.size() > best && text.substr(pos, t.size()) == t) best = t.size();
    }
    if (best == 0) {
      best = std::min(utf8_length(static_cast<unsigned char>(text[pos])),
                      text.size() - pos);
    }
    std::string_view glyph = text.substr(pos, best);
    Label id = symbols.find(glyph);
    if (id == kEpsilon) {
      throw UnknownSymbolError("unknown symbol '" + std::string(glyph) +
                               "' at offset " + std::to_string(pos));
    }
    out.push_back(id);
    pos += best;
  }
  return out;
}

std::string render(const SymbolTable& symbols, std::span<const Label> word) {
  std::string out;
  for (Label l : word) out += symbols.glyph(l);
  return out;
}

}  // namespace fsrw
