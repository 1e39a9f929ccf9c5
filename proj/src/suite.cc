#include "fsrw/suite.h"

#include <atomic>
#include <functional>
#include <mutex>
#include <thread>

#include "fsrw/algebra.h"
#include "fsrw/lm_concat.h"
#include "fsrw/markers.h"
#include "fsrw/optimize.h"

namespace fsrw {

namespace {

struct Sample {
  SymbolTablePtr symbols;
  std::vector<Label> alphabet;
  std::mt19937_64 rng;
};

using CaseFn = std::function<std::optional<std::string>(Sample&, size_t& words)>;

SuiteResult run(const SuiteOptions& options, const CaseFn& fn) {
  const size_t n = options.samples;
  std::vector<std::optional<std::string>> failures(n);
  std::atomic<size_t> next{0};
  std::atomic<size_t> stop_at{n};
  std::atomic<size_t> cases{0};
  std::atomic<size_t> words{0};

  auto worker = [&] {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= n || i >= stop_at.load()) return;
      Sample s;
      s.symbols = SymbolTable::create();
      for (const std::string& g : options.alphabet) {
        s.symbols->add_user_symbol(g);
        s.alphabet.push_back(s.symbols->find(g));
      }
      std::seed_seq seq{options.oracle.seed, static_cast<uint64_t>(i)};
      s.rng.seed(seq);
      size_t w = 0;
      std::optional<std::string> failure = fn(s, w);
      words += w;
      ++cases;
      if (failure) {
        failures[i] = "sample " + std::to_string(i) + ": " + *failure;
        size_t cur = stop_at.load();
        while (i < cur && !stop_at.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };

  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SuiteResult result;
  result.cases = cases;
  result.words = words;
  for (auto& f : failures) {
    if (f) {
      result.failure = std::move(f);
      break;
    }
  }
  return result;
}

std::vector<Fst> random_parts(Sample& s, std::string& desc) {
  const size_t n = 1 + std::uniform_int_distribution<size_t>(0, 2)(s.rng);
  std::vector<Fst> parts;
  desc = "lm_concat([";
  for (size_t i = 0; i < n; ++i) {
    std::string d;
    parts.push_back(random_transducer(s.symbols, s.alphabet, s.rng, &d));
    desc += (i ? ", " : "") + d;
  }
  desc += "])";
  return parts;
}

}  // namespace

SuiteResult replace_suite(const SuiteOptions& options) {
  const OracleConfig& cfg = options.oracle;
  return run(options, [&](Sample& s, size_t& words) -> std::optional<std::string> {
    MarkerAlphabet ctx(s.symbols);
    RandomRule rr = random_rule(s.symbols, s.alphabet, s.rng);
    Fst compiled = replace(ctx, rr.rule, options.form);
    auto oracle = [&](std::span<const Label> w) {
      return oracle_replace(rr.rule, w, cfg.limit);
    };
    auto d = compare_with_oracle(compiled, oracle, s.alphabet, cfg.max_len, cfg.limit);
    words += all_words(s.alphabet, cfg.max_len).size();
    if (d) return rr.description + ": " + describe(*s.symbols, *d);
    return std::nullopt;
  });
}

SuiteResult lm_concat_suite(const SuiteOptions& options) {
  const OracleConfig& cfg = options.oracle;
  return run(options, [&](Sample& s, size_t& words) -> std::optional<std::string> {
    MarkerAlphabet ctx(s.symbols);
    std::string desc;
    std::vector<Fst> parts = random_parts(s, desc);
    std::vector<Fst> domains;
    for (const Fst& p : parts) domains.push_back(project(p, Side::kDomain));
    const Fst marker = mark_boundaries(ctx, domains);
    const Fst full = lm_concat(ctx, parts);
    for (const Word& w : all_words(s.alphabet, cfg.max_len)) {
      ++words;
      const auto split = oracle_lm_split(parts, w);
      const TransduceResult marked = transduce(marker, w, cfg.limit);
      const std::string at = desc + " on \"" + render(*s.symbols, w) + "\": ";
      if (!split) {
        if (!marked.outputs.empty()) return at + "marked a string with no split";
      } else {
        if (marked.outputs.size() != 1) {
          return at + std::to_string(marked.outputs.size()) + " markings";
        }
        if (read_split(*s.symbols, marked.outputs[0]) != split) {
          return at + "split differs from the oracle (" +
                 render(*s.symbols, marked.outputs[0]) + ")";
        }
      }
      TransduceResult got = transduce(full, w, cfg.limit);
      std::vector<Word> want = oracle_lm_concat(parts, w);
      if (got.outputs != want) {
        return desc + ": " +
               describe(*s.symbols, Disagreement{w, got.outputs, want});
      }
    }
    return std::nullopt;
  });
}

SuiteResult multi_capture_suite(const SuiteOptions& options) {
  const OracleConfig& cfg = options.oracle;
  return run(options, [&](Sample& s, size_t& words) -> std::optional<std::string> {
    MarkerAlphabet ctx(s.symbols);
    std::string desc, ldesc, rdesc;
    std::vector<Fst> parts = random_parts(s, desc);
    Fst left = random_context(s.symbols, s.alphabet, s.rng, &ldesc);
    Fst right = random_context(s.symbols, s.alphabet, s.rng, &rdesc);
    Fst compiled =
        replace(ctx, ReplaceRule{lm_concat(ctx, parts), left, right}, options.form);
    TransductionOracle t = lm_concat_oracle(parts);
    auto oracle = [&](std::span<const Label> w) {
      return oracle_replace(t, left, right, w, cfg.limit);
    };
    auto d = compare_with_oracle(compiled, oracle, s.alphabet, cfg.max_len, cfg.limit);
    words += all_words(s.alphabet, cfg.max_len).size();
    if (d) {
      return "replace(" + desc + ", " + ldesc + ", " + rdesc +
             "): " + describe(*s.symbols, *d);
    }
    return std::nullopt;
  });
}

SuiteResult longest_match_forms_suite(const SuiteOptions& options) {
  const OracleConfig& cfg = options.oracle;
  return run(options, [&](Sample& s, size_t& words) -> std::optional<std::string> {
    MarkerAlphabet ctx(s.symbols);
    RandomRule rr = random_rule(s.symbols, s.alphabet, s.rng);
    const Fst phi = project(rr.rule.transducer, Side::kDomain);
    const Fst standard = longest_match(ctx, phi, LongestMatchForm::kStandard);
    const Fst constrained =
        longest_match(ctx, phi, LongestMatchForm::kPrefixConstrained);
    Fst a = replace(ctx, rr.rule, LongestMatchForm::kStandard);
    Fst b = replace(ctx, rr.rule, LongestMatchForm::kPrefixConstrained);
    if (!equivalent(a, b)) {
      return rr.description + ": compiled rules differ between forms";
    }
    auto oracle = [&](std::span<const Label> w) {
      return oracle_replace(rr.rule, w, cfg.limit);
    };
    auto d = compare_with_oracle(b, oracle, s.alphabet, cfg.max_len, cfg.limit);
    words += all_words(s.alphabet, cfg.max_len).size();
    if (d) return rr.description + ": " + describe(*s.symbols, *d);
    // The filters themselves may differ off the strings left_to_right
    // produces; compare them on those strings only.
    const Fst feed = compose_all({ctx.non_markers(), r_right(ctx, rr.rule.right),
                                  f_phi(ctx, phi), left_to_right(ctx, phi)});
    if (!equivalent(compose(feed, standard), compose(feed, constrained))) {
      return rr.description + ": longest_match filters differ";
    }
    return std::nullopt;
  });
}

}  // namespace fsrw
