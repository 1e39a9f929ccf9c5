#ifndef FSRW_TEXT_IO_H_
#define FSRW_TEXT_IO_H_

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fsrw/fst.h"

namespace fsrw {

// Text dump of a canonicalized machine:
//
//   fst <nstates> <initial>
//   #tokens <glyph> <glyph> ...     (optional; multi-character input glyphs)
//   sym <id> <glyph>                (every symbol, ascending id)
//   t <src> <dst> <in|-> <out|->    (symbol ids, '-' is epsilon)
//   f <state>
//
// Glyphs use C-style escapes (\\, \n, \t, \r, \xHH; space is \x20).
// A cascade file starts with `cascade <n>` followed by n sections sharing
// one symbol table.

std::string escape_glyph(std::string_view glyph);
// Throws FormatError on a bad escape.
std::string unescape_glyph(std::string_view text);

void write_dump(std::ostream& os, const Fst& m,
                std::span<const std::string> tokens = {});
std::string dump_string(const Fst& m, std::span<const std::string> tokens = {});

void write_cascade(std::ostream& os, const std::vector<Fst>& machines,
                   std::span<const std::string> tokens = {});

struct MachineFile {
  std::vector<Fst> machines;  // one, or the factors of a cascade
  std::vector<std::string> tokens;
  bool cascade = false;
};

// Throws FormatError.
MachineFile read_dump(std::istream& is);
MachineFile read_dump_file(const std::string& path);
MachineFile parse_dump(std::string_view text);

// Multi-character glyphs of the table's user alphabet, for `#tokens`.
std::vector<std::string> multichar_tokens(const SymbolTable& symbols);

// Re-expresses `m` over `symbols` by glyph (used to compare machines loaded
// from different files).
Fst remap_symbols(const Fst& m, const SymbolTablePtr& symbols);

}  // namespace fsrw

#endif  // FSRW_TEXT_IO_H_
