#ifndef FSRW_SYMBOL_TABLE_H_
#define FSRW_SYMBOL_TABLE_H_

#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace fsrw {

// Symbol ids. Id 0 is reserved for epsilon and never names a glyph.
using Label = int32_t;
inline constexpr Label kEpsilon = 0;

// Glyphs interned by every table, in this order (ids 1..6).
inline constexpr std::string_view kFlag0Glyph = "0";
inline constexpr std::string_view kFlag1Glyph = "1";
inline constexpr std::string_view kLb1Glyph = "<1";
inline constexpr std::string_view kLb2Glyph = "<2";
inline constexpr std::string_view kRb1Glyph = "1>";
inline constexpr std::string_view kRb2Glyph = "2>";

// Interned alphabet shared by every machine of one compilation.
//
// Iteration order is insertion order, so machines built from the same
// program get the same ids. Interning takes a writer lock; lookups take a
// reader lock, so one writer may intern while readers run.
class SymbolTable {
 public:
  SymbolTable();

  SymbolTable(const SymbolTable&) = delete;
  SymbolTable& operator=(const SymbolTable&) = delete;

  static std::shared_ptr<SymbolTable> create() {
    return std::make_shared<SymbolTable>();
  }

  // Returns the id of `glyph`, adding it if needed. Empty glyphs throw.
  Label intern(std::string_view glyph);

  // Returns kEpsilon if absent.
  Label find(std::string_view glyph) const;
  bool contains(std::string_view glyph) const { return find(glyph) != kEpsilon; }

  const std::string& glyph(Label id) const;

  // Number of real symbols; valid ids are 1..size().
  Label size() const;

  // All symbol ids in insertion order.
  std::vector<Label> symbols() const;

  // Sigma_user: what `?` denotes at the rule level.
  void add_user_symbol(std::string_view glyph);
  bool is_user_symbol(Label id) const;
  std::vector<Label> user_alphabet() const;

  Label flag0() const { return 1; }
  Label flag1() const { return 2; }
  Label lb1() const { return 3; }
  Label lb2() const { return 4; }
  Label rb1() const { return 5; }
  Label rb2() const { return 6; }

 private:
  Label intern_locked(std::string_view glyph);

  mutable std::shared_mutex mutex_;
  std::deque<std::string> glyphs_;  // index 0 unused (epsilon); stable refs
  std::unordered_map<std::string, Label> ids_;
  std::vector<bool> user_;
};

using SymbolTablePtr = std::shared_ptr<SymbolTable>;

}  // namespace fsrw

#endif  // FSRW_SYMBOL_TABLE_H_
