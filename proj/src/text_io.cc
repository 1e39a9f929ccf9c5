#include "fsrw/text_io.h"

#include <fstream>
#include <sstream>

#include "fsrw/error.h"
#include "fsrw/optimize.h"

namespace fsrw {

std::string escape_glyph(std::string_view glyph) {
  static const char* kHex = "0123456789abcdef";
  std::string out;
  for (char c : glyph) {
    const auto u = static_cast<unsigned char>(c);
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (u <= 0x20 || u == 0x7f) {
          out += "\\x";
          out += kHex[u >> 4];
          out += kHex[u & 0xF];
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string unescape_glyph(std::string_view text) {
  std::string out;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '\\') {
      out += text[i];
      continue;
    }
    if (++i >= text.size()) throw FormatError("dangling escape in glyph");
    switch (text[i]) {
      case '\\': out += '\\'; break;
      case 'n': out += '\n'; break;
      case 't': out += '\t'; break;
      case 'r': out += '\r'; break;
      case 'x': {
        if (i + 2 >= text.size()) throw FormatError("short \\x escape in glyph");
        int v = 0;
        for (int k = 1; k <= 2; ++k) {
          char h = text[i + k];
          v <<= 4;
          if (h >= '0' && h <= '9') v |= h - '0';
          else if (h >= 'a' && h <= 'f') v |= h - 'a' + 10;
          else if (h >= 'A' && h <= 'F') v |= h - 'A' + 10;
          else throw FormatError("bad hex digit in glyph escape");
        }
        out += static_cast<char>(v);
        i += 2;
        break;
      }
      default:
        throw FormatError(std::string("unknown escape \\") + text[i]);
    }
  }
  return out;
}

namespace {

void write_section(std::ostream& os, const Fst& raw,
                   std::span<const std::string> tokens) {
  const Fst m = canonicalize(raw);
  os << "fst " << m.num_states() << ' ' << m.initial() << '\n';
  if (!tokens.empty()) {
    os << "#tokens";
    for (const std::string& t : tokens) os << ' ' << escape_glyph(t);
    os << '\n';
  }
  const SymbolTable& syms = *m.symbols();
  for (Label l : syms.symbols()) {
    os << "sym " << l << ' ' << escape_glyph(syms.glyph(l)) << '\n';
  }
  auto label = [](Label l) {
    return l == kEpsilon ? std::string("-") : std::to_string(l);
  };
  for (StateId s = 0; s < m.num_states(); ++s) {
    for (const Arc& a : m.arcs(s)) {
      os << "t " << s << ' ' << a.next << ' ' << label(a.in) << ' '
         << label(a.out) << '\n';
    }
  }
  for (StateId f : m.finals()) os << "f " << f << '\n';
}

}  // namespace

void write_dump(std::ostream& os, const Fst& m,
                std::span<const std::string> tokens) {
  write_section(os, m, tokens);
}

std::string dump_string(const Fst& m, std::span<const std::string> tokens) {
  std::ostringstream os;
  write_dump(os, m, tokens);
  return os.str();
}

void write_cascade(std::ostream& os, const std::vector<Fst>& machines,
                   std::span<const std::string> tokens) {
  os << "cascade " << machines.size() << '\n';
  for (const Fst& m : machines) write_section(os, m, tokens);
}

namespace {

struct LineReader {
  std::istream& is;
  int line_no = 0;
  std::string pending;
  bool has_pending = false;

  bool next(std::string& line) {
    if (has_pending) {
      line = std::move(pending);
      has_pending = false;
      return true;
    }
    while (std::getline(is, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return true;
    }
    return false;
  }
  void push_back(std::string line) {
    pending = std::move(line);
    has_pending = true;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw FormatError("line " + std::to_string(line_no) + ": " + what);
  }
};

long parse_int(LineReader& r, const std::string& tok) {
  try {
    size_t used = 0;
    long v = std::stol(tok, &used);
    if (used != tok.size()) r.fail("bad integer '" + tok + "'");
    return v;
  } catch (const std::logic_error&) {
    r.fail("bad integer '" + tok + "'");
  }
}

Fst read_section(LineReader& r, SymbolTablePtr& symbols,
                 std::vector<std::string>& tokens) {
  std::string line;
  if (!r.next(line)) r.fail("missing fst header");
  std::istringstream header(line);
  std::string kw, ns, is;
  header >> kw >> ns >> is;
  if (kw != "fst" || ns.empty() || is.empty()) r.fail("expected 'fst <n> <initial>'");
  const long nstates = parse_int(r, ns);
  const long initial = parse_int(r, is);
  if (nstates < 1) r.fail("machine needs at least one state");
  if (initial < 0 || initial >= nstates) r.fail("initial state out of range");

  const bool fresh = symbols == nullptr;
  if (fresh) symbols = SymbolTable::create();
  Fst m(symbols);
  m.add_states(static_cast<StateId>(nstates));
  m.set_initial(static_cast<StateId>(initial));

  while (r.next(line)) {
    if (line.rfind("fst ", 0) == 0) {
      r.push_back(line);
      break;
    }
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "#tokens") {
      std::string t;
      std::vector<std::string> found;
      while (ls >> t) found.push_back(unescape_glyph(t));
      if (tokens.empty()) tokens = found;
    } else if (tag == "sym") {
      std::string id_text, glyph_text;
      ls >> id_text >> glyph_text;
      std::string extra;
      if (glyph_text.empty() || (ls >> extra)) r.fail("expected 'sym <id> <glyph>'");
      const long id = parse_int(r, id_text);
      const std::string glyph = unescape_glyph(glyph_text);
      if (fresh) {
        if (symbols->intern(glyph) != id) {
          r.fail("symbol ids must be dense and list reserved glyphs first");
        }
      } else if (symbols->find(glyph) != id) {
        r.fail("cascade sections disagree on symbol '" + glyph + "'");
      }
    } else if (tag == "t") {
      std::string f[4];
      ls >> f[0] >> f[1] >> f[2] >> f[3];
      std::string extra;
      if (f[3].empty() || (ls >> extra)) r.fail("expected 't <src> <dst> <in> <out>'");
      const long src = parse_int(r, f[0]);
      const long dst = parse_int(r, f[1]);
      auto label = [&](const std::string& tok) -> Label {
        if (tok == "-") return kEpsilon;
        long v = parse_int(r, tok);
        if (v < 1 || v > symbols->size()) r.fail("undeclared symbol id " + tok);
        return static_cast<Label>(v);
      };
      if (src < 0 || src >= nstates || dst < 0 || dst >= nstates) {
        r.fail("transition state out of range");
      }
      m.add_arc(static_cast<StateId>(src), label(f[2]), label(f[3]),
                static_cast<StateId>(dst));
    } else if (tag == "f") {
      std::string s;
      ls >> s;
      const long f = parse_int(r, s);
      if (f < 0 || f >= nstates) r.fail("final state out of range");
      m.set_final(static_cast<StateId>(f));
    } else {
      r.fail("unknown line tag '" + tag + "'");
    }
  }
  return m;
}

}  // namespace

MachineFile read_dump(std::istream& is) {
  LineReader r{is, 0, {}, false};
  MachineFile file;
  std::string line;
  if (!r.next(line)) throw FormatError("empty machine file");
  size_t sections = 1;
  if (line.rfind("cascade", 0) == 0) {
    std::istringstream ls(line);
    std::string kw, n;
    ls >> kw >> n;
    const long count = parse_int(r, n);
    if (count < 1) r.fail("cascade needs at least one section");
    sections = static_cast<size_t>(count);
    file.cascade = true;
  } else {
    r.push_back(line);
  }
  SymbolTablePtr symbols;
  for (size_t i = 0; i < sections; ++i) {
    file.machines.push_back(read_section(r, symbols, file.tokens));
  }
  if (r.next(line)) r.fail("trailing content after last section");
  return file;
}

MachineFile read_dump_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return read_dump(in);
}

MachineFile parse_dump(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_dump(in);
}

std::vector<std::string> multichar_tokens(const SymbolTable& symbols) {
  std::vector<std::string> out;
  for (Label l : symbols.user_alphabet()) {
    const std::string& g = symbols.glyph(l);
    // A single UTF-8 code point is not a multi-character token.
    size_t cps = 0;
    for (char c : g) {
      if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++cps;
    }
    if (cps > 1) out.push_back(g);
  }
  return out;
}

Fst remap_symbols(const Fst& m, const SymbolTablePtr& symbols) {
  const SymbolTable& from = *m.symbols();
  std::vector<Label> map(from.size() + 1, kEpsilon);
  for (Label l : from.symbols()) map[l] = symbols->intern(from.glyph(l));
  Fst out(symbols);
  out.add_states(m.num_states());
  if (m.num_states() > 0) out.set_initial(m.initial());
  for (StateId s = 0; s < m.num_states(); ++s) {
    if (m.is_final(s)) out.set_final(s);
    for (const Arc& a : m.arcs(s)) out.add_arc(s, map[a.in], map[a.out], a.next);
  }
  return out;
}

}  // namespace fsrw
