#include "fsrw/symbol_table.h"

#include "fsrw/error.h"

namespace fsrw {

SymbolTable::SymbolTable() {
  glyphs_.emplace_back();
  user_.push_back(false);
  for (std::string_view g : {kFlag0Glyph, kFlag1Glyph, kLb1Glyph, kLb2Glyph,
                             kRb1Glyph, kRb2Glyph}) {
    intern_locked(g);
  }
}

Label SymbolTable::intern(std::string_view glyph) {
  {
    std::shared_lock lock(mutex_);
    auto it = ids_.find(std::string(glyph));
    if (it != ids_.end()) return it->second;
  }
  std::unique_lock lock(mutex_);
  return intern_locked(glyph);
}

Label SymbolTable::intern_locked(std::string_view glyph) {
  if (glyph.empty()) throw StructuralError("empty glyph cannot be interned");
  auto [it, inserted] =
      ids_.emplace(std::string(glyph), static_cast<Label>(glyphs_.size()));
  if (inserted) {
    glyphs_.emplace_back(glyph);
    user_.push_back(false);
  }
  return it->second;
}

Label SymbolTable::find(std::string_view glyph) const {
  std::shared_lock lock(mutex_);
  auto it = ids_.find(std::string(glyph));
  return it == ids_.end() ? kEpsilon : it->second;
}

const std::string& SymbolTable::glyph(Label id) const {
  std::shared_lock lock(mutex_);
  if (id <= 0 || static_cast<size_t>(id) >= glyphs_.size()) {
    throw StructuralError("symbol id out of range: " + std::to_string(id));
  }
  return glyphs_[id];
}

Label SymbolTable::size() const {
  std::shared_lock lock(mutex_);
  return static_cast<Label>(glyphs_.size() - 1);
}

std::vector<Label> SymbolTable::symbols() const {
  std::shared_lock lock(mutex_);
  std::vector<Label> out;
  out.reserve(glyphs_.size() - 1);
  for (Label i = 1; i < static_cast<Label>(glyphs_.size()); ++i) out.push_back(i);
  return out;
}

void SymbolTable::add_user_symbol(std::string_view glyph) {
  std::unique_lock lock(mutex_);
  Label id = intern_locked(glyph);
  user_[id] = true;
}

bool SymbolTable::is_user_symbol(Label id) const {
  std::shared_lock lock(mutex_);
  return id > 0 && static_cast<size_t>(id) < user_.size() && user_[id];
}

std::vector<Label> SymbolTable::user_alphabet() const {
  std::shared_lock lock(mutex_);
  std::vector<Label> out;
  for (Label i = 1; i < static_cast<Label>(user_.size()); ++i) {
    if (user_[i]) out.push_back(i);
  }
  return out;
}

}  // namespace fsrw
