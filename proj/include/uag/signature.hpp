#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace uag {

struct Symbol {
  std::string name;
  std::size_t arity = 0;
  /// Set for binary symbols written infix. Larger binds tighter; always left-associative.
  std::optional<int> precedence;

  bool infix() const noexcept { return precedence.has_value(); }
  friend bool operator==(const Symbol&, const Symbol&) = default;
};

/// Ordered list of operation symbols. Declaration order is significant: it
/// fixes table order in algebra files and the order of term enumeration.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<Symbol> symbols);

  /// Appends a symbol; throws InputError on a duplicate name or on an infix
  /// declaration for a non-binary symbol. Returns the new symbol index.
  std::size_t add(Symbol symbol);

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  const Symbol& operator[](std::size_t i) const { return symbols_[i]; }
  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Like find, but throws InputError naming the missing symbol.
  std::size_t index_of(std::string_view name) const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<Symbol> symbols_;
};

/// Reads lines `op <name> <arity> [infix <prec>]`; `#` starts a comment.
Signature parse_signature(std::string_view text);
Signature load_signature_file(const std::string& path);
std::string print_signature(const Signature& sig);

}  // namespace uag
