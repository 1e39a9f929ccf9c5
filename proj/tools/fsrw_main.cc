// fsrw: compile rewrite rules, apply and inspect the machines.

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "fsrw/algebra.h"
#include "fsrw/compiler.h"
#include "fsrw/error.h"
#include "fsrw/lm_concat.h"
#include "fsrw/macro_expander.h"
#include "fsrw/markers.h"
#include "fsrw/optimize.h"
#include "fsrw/oracle.h"
#include "fsrw/parser.h"
#include "fsrw/suite.h"
#include "fsrw/text_io.h"
#include "fsrw/transduce.h"

namespace {

using namespace fsrw;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kIoError = 2;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

MachineFile load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  try {
    return read_dump(in);
  } catch (const FormatError& e) {
    throw FormatError(path + ":" + e.what());
  }
}

void print_warnings(const std::string& path,
                    const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << path << ": warning: " << w << '\n';
}

int cmd_compile(const std::string& rules, const std::string& out_path,
                bool cascade) {
  const std::string text = slurp(rules);
  std::ostringstream dump;
  try {
    if (cascade) {
      CompiledCascade c = compile_cascade(text);
      print_warnings(rules, c.warnings);
      write_cascade(dump, c.factors, multichar_tokens(*c.symbols));
    } else {
      CompiledProgram p = compile_source(text);
      print_warnings(rules, p.warnings);
      write_dump(dump, p.machine, multichar_tokens(*p.symbols));
    }
  } catch (const Error& e) {
    std::cerr << rules << ":" << e.what() << '\n';
    return kFailed;
  }
  if (out_path.empty() || out_path == "-") {
    std::cout << dump.str();
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!(out << dump.str())) throw IoError("cannot write " + out_path);
  }
  return kOk;
}

int cmd_apply(const std::string& machine_path, bool all, size_t limit,
              const std::string& on_empty) {
  const MachineFile file = load(machine_path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(std::cin, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  std::vector<std::string> results(lines.size());
  std::vector<std::string> errors(lines.size());
  const SymbolTable& symbols = *file.machines.front().symbols();
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next.fetch_add(1)) < lines.size();) {
      try {
        const Word input = tokenize(symbols, lines[i], file.tokens);
        TransduceResult r = file.cascade
                                ? transduce_cascade(file.machines, input, limit)
                                : transduce(file.machines.front(), input, limit);
        if (r.outputs.empty()) {
          results[i] = on_empty;
        } else if (!all) {
          results[i] = render(symbols, r.outputs.front());
        } else {
          for (size_t k = 0; k < r.outputs.size(); ++k) {
            if (k) results[i] += '\t';
            results[i] += render(symbols, r.outputs[k]);
          }
        }
        if (r.truncated && all) {
          errors[i] = "output truncated at " + std::to_string(limit);
        }
      } catch (const UnknownSymbolError& e) {
        results[i] = "!error";
        errors[i] = e.what();
      }
    }
  };
  const unsigned threads =
      std::min<size_t>(std::max(1u, std::thread::hardware_concurrency()),
                       std::max<size_t>(1, lines.size() / 64));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (size_t i = 0; i < lines.size(); ++i) {
    std::cout << results[i] << '\n';
    if (!errors[i].empty()) {
      std::cerr << "line " << i + 1 << ": " << errors[i] << '\n';
    }
  }
  return kOk;
}

void print_machine(std::ostream& os, const Fst& m) {
  const SymbolTable& symbols = *m.symbols();
  auto name = [&](Label l) {
    return l == kEpsilon ? std::string("[]") : escape_glyph(symbols.glyph(l));
  };
  const Fst c = canonicalize(m);
  os << (c.is_recognizer() ? "recognizer" : "transducer") << ", "
     << c.num_states() << " states, " << c.num_arcs() << " arcs\n";
  for (StateId s = 0; s < c.num_states(); ++s) {
    os << (s == c.initial() ? "->" : "  ") << s << (c.is_final(s) ? " (final)" : "")
       << '\n';
    for (const Arc& a : c.arcs(s)) {
      os << "      " << name(a.in);
      if (a.in != a.out) os << ':' << name(a.out);
      os << " -> " << a.next << '\n';
    }
  }
}

int cmd_dump(const std::string& path) {
  const MachineFile file = load(path);
  for (size_t i = 0; i < file.machines.size(); ++i) {
    if (file.cascade) std::cout << "# factor " << i + 1 << '\n';
    print_machine(std::cout, file.machines[i]);
  }
  return kOk;
}

int cmd_equiv(const std::string& path_a, const std::string& path_b) {
  const MachineFile a = load(path_a);
  const MachineFile b = load(path_b);
  if (a.cascade || b.cascade) throw FormatError("equiv expects single machines");
  auto common = SymbolTable::create();
  const Fst ma = remap_symbols(a.machines.front(), common);
  const Fst mb = remap_symbols(b.machines.front(), common);
  const bool pairwise = !ma.is_recognizer() || !mb.is_recognizer();
  const bool same = equivalent(ma, mb);
  std::cout << (same ? "equivalent" : "not equivalent") << '\n';
  if (pairwise) {
    std::cerr << "note: transducers were compared as automata over label pairs;"
                 " differently aligned machines can denote the same relation\n";
  }
  return same ? kOk : kFailed;
}

int check_suite(const SuiteOptions& options) {
  struct Named {
    const char* name;
    SuiteResult (*run)(const SuiteOptions&);
  };
  for (const Named& suite :
       {Named{"replace", replace_suite}, Named{"lm_concat", lm_concat_suite},
        Named{"multi-capture replace", multi_capture_suite}}) {
    SuiteResult r = suite.run(options);
    if (r.failure) {
      std::cout << suite.name << ": FAIL " << *r.failure << '\n';
      return kFailed;
    }
    std::cout << suite.name << ": ok, " << r.cases << " samples, " << r.words
              << " inputs\n";
  }
  return kOk;
}

int check_rules(const std::string& path, const SuiteOptions& options,
                size_t samples) {
  const std::string text = slurp(path);
  std::optional<CompiledProgram> compiled;
  try {
    compiled.emplace(compile_source(text));
  } catch (const Error& e) {
    std::cerr << path << ":" << e.what() << '\n';
    return kFailed;
  }
  const CompiledProgram& p = *compiled;
  const Regex& main = p.expanded;
  std::function<std::vector<Word>(std::span<const Label>)> oracle;
  auto sub = [&](const Regex& r) { return compile_program(r, p.symbols); };
  auto parts_of = [&](const Regex& r) {
    std::vector<Fst> parts;
    for (const Regex& c : r.children) parts.push_back(sub(c));
    return parts;
  };
  const size_t limit = options.oracle.limit;
  if (main.kind == NodeKind::kReplace) {
    const Regex& t = main.children[0];
    TransductionOracle to = t.kind == NodeKind::kLmConcat
                                ? lm_concat_oracle(parts_of(t))
                                : machine_oracle(sub(t));
    Fst left = sub(main.children[1]);
    Fst right = sub(main.children[2]);
    oracle = [to, left, right, limit](std::span<const Label> w) {
      return oracle_replace(to, left, right, w, limit);
    };
  } else if (main.kind == NodeKind::kLmConcat) {
    std::vector<Fst> parts = parts_of(main);
    oracle = [parts](std::span<const Label> w) { return oracle_lm_concat(parts, w); };
  } else {
    std::cerr << path << ": check needs a replace(...) or lm_concat([...]) main "
                 "expression\n";
    return kFailed;
  }

  const MarkerAlphabet ctx(p.symbols);
  const std::vector<Label>& alphabet = ctx.user();
  std::vector<Word> inputs = all_words(alphabet, std::min(options.oracle.max_len, 3));
  std::mt19937_64 rng(options.oracle.seed);
  std::uniform_int_distribution<int> len(0, options.oracle.max_len);
  for (size_t i = 0; i < samples && !alphabet.empty(); ++i) {
    Word w(len(rng));
    for (Label& l : w) l = alphabet[rng() % alphabet.size()];
    inputs.push_back(std::move(w));
  }
  for (const Word& w : inputs) {
    TransduceResult got = transduce(p.machine, w, limit);
    std::vector<Word> want = oracle(w);
    if (got.outputs != want) {
      std::cout << "FAIL "
                << describe(*p.symbols, Disagreement{w, got.outputs, want})
                << '\n';
      return kFailed;
    }
  }
  std::cout << "ok, " << inputs.size() << " inputs agree with the oracle\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compile rewrite rules with backreferences into transducers."};
  app.require_subcommand(1);

  std::string rules, out_path, machine, on_empty, path_a, path_b;
  bool cascade = false, all = false;
  size_t limit = 1000, samples = 200;
  int max_len = 8;
  uint64_t seed = 42;

  auto* compile = app.add_subcommand("compile", "compile a rule file to a dump");
  compile->add_option("-r,--rules", rules, "rule file (.fsr)")->required();
  compile->add_option("-o,--output", out_path, "output dump (default stdout)");
  compile->add_flag("--cascade", cascade, "keep the replace steps as separate machines");

  auto* apply = app.add_subcommand("apply", "transduce stdin lines");
  apply->add_option("-m,--machine", machine, "machine dump")->required();
  apply->add_flag("--all", all, "print every output, tab-separated");
  apply->add_option("--limit", limit, "output cap per line")
      ->check(CLI::Range(size_t{1}, std::numeric_limits<size_t>::max()));
  apply->add_option("--on-empty", on_empty, "printed when a line has no output");

  auto* dump = app.add_subcommand("dump", "print a machine readably");
  dump->add_option("-m,--machine", machine, "machine dump")->required();

  auto* equiv = app.add_subcommand("equiv", "exit 0 iff two machines are equivalent");
  equiv->add_option("a", path_a)->required();
  equiv->add_option("b", path_b)->required();

  auto* check = app.add_subcommand("check", "compare compiled rules with the oracle");
  check->add_option("-r,--rules", rules,
                    "rule file; without it a randomized replace suite runs");
  check->add_option("--max-len", max_len, "longest input")
      ->check(CLI::Range(0, 16));
  check->add_option("--samples", samples, "random rules (or inputs with -r)");
  check->add_option("--seed", seed, "random seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*compile) return cmd_compile(rules, out_path, cascade);
    if (*apply) return cmd_apply(machine, all, limit, on_empty);
    if (*dump) return cmd_dump(machine);
    if (*equiv) return cmd_equiv(path_a, path_b);
    if (*check) {
      SuiteOptions options;
      options.oracle.max_len = max_len;
      options.oracle.seed = seed;
      options.samples = samples;
      if (rules.empty()) return check_suite(options);
      return check_rules(rules, options, samples);
    }
  } catch (const IoError& e) {
    std::cerr << "fsrw: " << e.what() << '\n';
    return kIoError;
  } catch (const FormatError& e) {
    std::cerr << "fsrw: " << e.what() << '\n';
    return kIoError;
  } catch (const Error& e) {
    std::cerr << "fsrw: " << e.what() << '\n';
    return kFailed;
  }
  return kOk;
}
