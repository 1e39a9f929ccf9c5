#include "fsrw/macro_expander.h"

#include <set>
#include <unordered_map>

#include "fsrw/error.h"
#include "fsrw/parser.h"

namespace fsrw {

void MacroEnv::define(MacroDef def) {
  auto key = std::make_pair(def.name, def.params.size());
  defs_[key] = std::move(def);
}

const MacroDef* MacroEnv::find(const std::string& name, size_t arity) const {
  auto it = defs_.find({name, arity});
  return it == defs_.end() ? nullptr : &it->second;
}

std::vector<size_t> MacroEnv::arities(const std::string& name) const {
  std::vector<size_t> out;
  for (auto it = defs_.lower_bound({name, 0});
       it != defs_.end() && it->first.first == name; ++it) {
    out.push_back(it->first.second);
  }
  return out;
}

const std::vector<size_t>& builtin_arities(const std::string& name) {
  static const auto* table = [] {
    auto* t = new std::unordered_map<std::string, std::vector<size_t>>;
    for (const char* n : {"sig", "xsig", "lb1", "lb2", "rb1", "rb2", "lb", "rb",
                          "b1", "b2", "brack", "true", "false"}) {
      (*t)[n] = {0};
    }
    (*t)["non_markers"] = {0, 1};
    for (const char* n :
         {"not", "$$", "intro", "xintro", "introx", "xintrox",
          "coerce_to_boolean", "r", "f", "left_to_right", "longest_match",
          "aux_replace", "l1", "l2"}) {
      (*t)[n] = {1};
    }
    for (const char* n : {"ign", "xign", "ignx", "xignx", "if_p_then_s",
                          "if_s_then_p", "p_iff_s", "l_iff_r", "ignx_1"}) {
      (*t)[n] = {2};
    }
    (*t)["if"] = {3};
    return t;
  }();
  static const std::vector<size_t> none;
  auto it = table->find(name);
  return it == table->end() ? none : it->second;
}

bool is_builtin(const std::string& name) {
  return !builtin_arities(name).empty();
}

const MacroEnv& stdlib_macros() {
  static const MacroEnv env = [] {
    MacroEnv e;
    const char* text =
        "macro(priority_union(Q,R), {Q, ~domain(Q) o R}).\n"
        "macro(lenient_composition(R,C), priority_union(R o C, R)).\n"
        "[].\n";
    for (MacroDef& def : parse_program(text).macros) e.define(std::move(def));
    return e;
  }();
  return env;
}

namespace {

using Bindings = std::unordered_map<std::string, const Regex*>;

class Expander {
 public:
  Expander(const MacroEnv& env, int max_depth)
      : env_(env), max_depth_(max_depth) {}

  Regex expand(const Regex& r, const Bindings& scope) {
    switch (r.kind) {
      case NodeKind::kLiteral:
        if (r.quoted) return r;
        if (auto it = scope.find(r.text); it != scope.end()) return *it->second;
        return call(r, r.text, {}, /*bare=*/true);
      case NodeKind::kMacroCall: {
        std::vector<Regex> args;
        for (const Regex& a : r.children) args.push_back(expand(a, scope));
        return call(r, r.text, std::move(args), /*bare=*/false);
      }
      case NodeKind::kRepeatN: {
        if (r.count < 0) {
          throw MacroError(where(r) + "negative repetition count " +
                           std::to_string(r.count));
        }
        if (r.count > kMaxRepetition) {
          throw MacroError(where(r) + "repetition count " +
                           std::to_string(r.count) + " exceeds " +
                           std::to_string(kMaxRepetition));
        }
        if (r.count == 0) return Regex::leaf(NodeKind::kEmptyString);
        Regex body = expand(r.children[0], scope);
        return Regex::node(NodeKind::kSeq,
                           std::vector<Regex>(static_cast<size_t>(r.count), body));
      }
      default: {
        Regex out = r;
        for (Regex& c : out.children) c = expand(c, scope);
        return out;
      }
    }
  }

 private:
  static std::string where(const Regex& r) {
    if (r.line == 0) return "";
    return std::to_string(r.line) + ":" + std::to_string(r.column) + ": ";
  }

  Regex call(const Regex& at, const std::string& name, std::vector<Regex> args,
             bool bare) {
    const size_t arity = args.size();
    if (const MacroDef* def = env_.find(name, arity)) {
      auto key = std::make_pair(name, arity);
      if (active_.count(key)) {
        throw MacroError(where(at) + "recursive macro " + name + "/" +
                         std::to_string(arity));
      }
      if (static_cast<int>(active_.size()) >= max_depth_) {
        throw MacroError(where(at) + "macro expansion depth limit (" +
                         std::to_string(max_depth_) + ") exceeded");
      }
      active_.insert(key);
      Bindings inner;
      for (size_t i = 0; i < arity; ++i) inner[def->params[i]] = &args[i];
      Regex out = expand(def->body, inner);
      active_.erase(key);
      return out;
    }
    const auto& builtin = builtin_arities(name);
    for (size_t n : builtin) {
      if (n == arity) return Regex::call(name, std::move(args));
    }
    if (bare) return Regex::literal(name);
    std::vector<size_t> known = env_.arities(name);
    known.insert(known.end(), builtin.begin(), builtin.end());
    if (known.empty()) throw MacroError(where(at) + "unknown macro " + name);
    std::string list;
    for (size_t n : known) list += (list.empty() ? "" : ", ") + std::to_string(n);
    throw MacroError(where(at) + name + " called with " + std::to_string(arity) +
                     " argument(s); defined with " + list);
  }

  const MacroEnv& env_;
  int max_depth_;
  std::set<std::pair<std::string, size_t>> active_;
};

}  // namespace

Regex expand_macros(const RuleProgram& program, const MacroEnv& env,
                    int max_depth) {
  MacroEnv merged = env;
  for (const MacroDef& def : program.macros) {
    if (is_builtin(def.name)) {
      throw MacroError(std::to_string(def.line) + ":1: cannot redefine builtin " +
                       def.name);
    }
    merged.define(def);
  }
  return Expander(merged, max_depth).expand(program.main, {});
}

}  // namespace fsrw
