#include "fsrw/compiler.h"

#include "fsrw/algebra.h"
#include "fsrw/error.h"
#include "fsrw/lm_concat.h"
#include "fsrw/macro_expander.h"
#include "fsrw/markers.h"
#include "fsrw/optimize.h"
#include "fsrw/parser.h"

namespace fsrw {

void register_literals(const Regex& expanded, SymbolTable& symbols) {
  if (expanded.kind == NodeKind::kLiteral) symbols.add_user_symbol(expanded.text);
  for (const Regex& c : expanded.children) register_literals(c, symbols);
}

namespace {

class Evaluator {
 public:
  Evaluator(const MarkerAlphabet& ctx, const CompileOptions& options,
            std::vector<std::string>* warnings)
      : ctx_(ctx), options_(options), warnings_(warnings) {}

  Fst eval(const Regex& r) {
    try {
      return eval_node(r);
    } catch (const CoercionError& e) {
      throw CoercionError(where(r) + e.what());
    }
  }

  ReplaceRule rule(const Regex& r) {
    Fst left = eval(r.children[1]);
    Fst right = eval(r.children[2]);
    if (!left.is_recognizer() || !right.is_recognizer()) {
      throw CoercionError(where(r) + "replace contexts must be languages");
    }
    return ReplaceRule{eval(r.children[0]), std::move(left), std::move(right)};
  }

 private:
  static std::string where(const Regex& r) {
    if (r.line == 0) return "";
    return std::to_string(r.line) + ":" + std::to_string(r.column) + ": ";
  }

  std::vector<Fst> eval_all(const std::vector<Regex>& rs) {
    std::vector<Fst> out;
    out.reserve(rs.size());
    for (const Regex& r : rs) out.push_back(eval(r));
    return out;
  }

  const SymbolTablePtr& symbols() const { return ctx_.symbols(); }

  Fst eval_node(const Regex& r) {
    switch (r.kind) {
      case NodeKind::kEmptyString: return empty_string(symbols());
      case NodeKind::kEmptyLang: return empty_language(symbols());
      case NodeKind::kLiteral:
        return symbol(symbols(), symbols()->intern(r.text));
      case NodeKind::kAny: return any_of(symbols(), ctx_.user());
      case NodeKind::kSeq:
        if (r.children.empty()) return empty_string(symbols());
        return concat(eval_all(r.children));
      case NodeKind::kUnion:
        if (r.children.empty()) return empty_language(symbols());
        return union_of(eval_all(r.children));
      case NodeKind::kStar: return star(eval(r.children[0]));
      case NodeKind::kPlus: return plus(eval(r.children[0]));
      case NodeKind::kOption: return option(eval(r.children[0]));
      case NodeKind::kComplement: return complement(eval(r.children[0]));
      case NodeKind::kContain: return contain(eval(r.children[0]));
      case NodeKind::kDiff:
        return difference(eval(r.children[0]), eval(r.children[1]));
      case NodeKind::kIntersect:
        return intersect(eval(r.children[0]), eval(r.children[1]));
      case NodeKind::kPair:
      case NodeKind::kCross:
        return cross_product(eval(r.children[0]), eval(r.children[1]));
      case NodeKind::kCompose:
        return compose(eval(r.children[0]), eval(r.children[1]));
      case NodeKind::kDomain: return project(eval(r.children[0]), Side::kDomain);
      case NodeKind::kRange: return project(eval(r.children[0]), Side::kRange);
      case NodeKind::kIdentity: return identity_lift(eval(r.children[0]));
      case NodeKind::kInverse: return invert(eval(r.children[0]));
      case NodeKind::kReplace:
        return replace(ctx_, rule(r), options_.longest_match, warnings_);
      case NodeKind::kLmConcat:
        if (r.children.empty()) {
          throw StructuralError(where(r) + "lm_concat of an empty list");
        }
        return lm_concat(ctx_, eval_all(r.children));
      case NodeKind::kRepeatN: {
        if (r.count < 0) throw MacroError(where(r) + "negative repetition count");
        if (r.count == 0) return empty_string(symbols());
        return concat(std::vector<Fst>(static_cast<size_t>(r.count),
                                       eval(r.children[0])));
      }
      case NodeKind::kMacroCall:
        return builtin(r);
    }
    throw StructuralError("unhandled node");
  }

  Fst builtin(const Regex& r) {
    const std::string& n = r.text;
    const auto a = eval_all(r.children);
    switch (a.size()) {
      case 0:
        if (n == "sig") return ctx_.sig();
        if (n == "xsig") return ctx_.xsig();
        if (n == "lb1") return bracket(ctx_, Bracket::kLb1);
        if (n == "lb2") return bracket(ctx_, Bracket::kLb2);
        if (n == "rb1") return bracket(ctx_, Bracket::kRb1);
        if (n == "rb2") return bracket(ctx_, Bracket::kRb2);
        if (n == "lb") return lb(ctx_);
        if (n == "rb") return rb(ctx_);
        if (n == "b1") return b1(ctx_);
        if (n == "b2") return b2(ctx_);
        if (n == "brack") return brack(ctx_);
        if (n == "true") return true_lang(ctx_);
        if (n == "false") return false_lang(ctx_);
        if (n == "non_markers") return ctx_.non_markers();
        break;
      case 1:
        if (n == "non_markers") return non_markers_of(ctx_, a[0]);
        if (n == "not") return not_enc(ctx_, a[0]);
        if (n == "$$") return contains_enc(ctx_, a[0]);
        if (n == "intro") return intro(ctx_, a[0]);
        if (n == "xintro") return xintro(ctx_, a[0]);
        if (n == "introx") return introx(ctx_, a[0]);
        if (n == "xintrox") return xintrox(ctx_, a[0]);
        if (n == "coerce_to_boolean") return coerce_to_boolean(ctx_, a[0]);
        if (n == "r") return r_right(ctx_, a[0]);
        if (n == "f") return f_phi(ctx_, a[0]);
        if (n == "left_to_right") return left_to_right(ctx_, a[0]);
        if (n == "longest_match") {
          return longest_match(ctx_, a[0], options_.longest_match);
        }
        if (n == "aux_replace") return aux_replace(ctx_, a[0]);
        if (n == "l1") return l1(ctx_, a[0]);
        if (n == "l2") return l2(ctx_, a[0]);
        break;
      case 2:
        if (n == "ign") return ign(ctx_, a[0], a[1]);
        if (n == "xign") return xign(ctx_, a[0], a[1]);
        if (n == "ignx") return ignx(ctx_, a[0], a[1]);
        if (n == "xignx") return xignx(ctx_, a[0], a[1]);
        if (n == "if_p_then_s") return if_p_then_s(ctx_, a[0], a[1]);
        if (n == "if_s_then_p") return if_s_then_p(ctx_, a[0], a[1]);
        if (n == "p_iff_s") return p_iff_s(ctx_, a[0], a[1]);
        if (n == "l_iff_r") return l_iff_r(ctx_, a[0], a[1]);
        if (n == "ignx_1") return ignx_1(ctx_, a[0], a[1]);
        break;
      case 3:
        if (n == "if") return if_then_else(ctx_, a[0], a[1], a[2]);
        break;
    }
    throw MacroError(where(r) + "unexpanded macro " + n + "/" +
                     std::to_string(a.size()));
  }

  const MarkerAlphabet& ctx_;
  const CompileOptions& options_;
  std::vector<std::string>* warnings_;
};

struct Prepared {
  SymbolTablePtr symbols;
  Regex expanded;
};

Prepared prepare(std::string_view text) {
  RuleProgram program = parse_program(text);
  Prepared p{SymbolTable::create(), expand_macros(program)};
  for (const std::string& g : program.alphabet) p.symbols->add_user_symbol(g);
  register_literals(p.expanded, *p.symbols);
  return p;
}

void flatten_compose(const Regex& r, std::vector<const Regex*>& out) {
  if (r.kind == NodeKind::kCompose) {
    flatten_compose(r.children[0], out);
    flatten_compose(r.children[1], out);
  } else {
    out.push_back(&r);
  }
}

}  // namespace

Fst compile_program(const Regex& expanded, const SymbolTablePtr& symbols,
                    const CompileOptions& options,
                    std::vector<std::string>* warnings) {
  register_literals(expanded, *symbols);
  MarkerAlphabet ctx(symbols);
  return canonicalize(optimize(Evaluator(ctx, options, warnings).eval(expanded)));
}

CompiledProgram compile_source(std::string_view text,
                               const CompileOptions& options) {
  Prepared p = prepare(text);
  CompiledProgram out{p.symbols, std::move(p.expanded), Fst(p.symbols), {}};
  out.machine = compile_program(out.expanded, out.symbols, options, &out.warnings);
  return out;
}

CompiledCascade compile_cascade(std::string_view text,
                                const CompileOptions& options) {
  Prepared p = prepare(text);
  CompiledCascade out{p.symbols, {}, {}};
  MarkerAlphabet ctx(p.symbols);
  Evaluator ev(ctx, options, &out.warnings);
  std::vector<const Regex*> chain;
  flatten_compose(p.expanded, chain);
  for (const Regex* r : chain) {
    if (r->kind == NodeKind::kReplace) {
      for (Fst& f : replace_factors(ctx, ev.rule(*r), options.longest_match,
                                    &out.warnings)) {
        out.factors.push_back(canonicalize(optimize(f)));
      }
    } else {
      out.factors.push_back(canonicalize(optimize(ev.eval(*r))));
    }
  }
  return out;
}

}  // namespace fsrw
