#include "uag/signature.hpp"

#include <fstream>
#include <sstream>

#include "uag/error.hpp"
#include "text_util.hpp"

namespace uag {

Signature::Signature(std::vector<Symbol> symbols) {
  for (auto& s : symbols) add(std::move(s));
}

std::size_t Signature::add(Symbol symbol) {
  if (symbol.name.empty()) throw InputError("symbol name must be nonempty");
  if (find(symbol.name)) throw InputError("duplicate symbol '" + symbol.name + "'");
  if (symbol.precedence && symbol.arity != 2) {
    throw InputError("infix symbol '" + symbol.name + "' must be binary");
  }
  symbols_.push_back(std::move(symbol));
  return symbols_.size() - 1;
}

std::optional<std::size_t> Signature::find(std::string_view name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t Signature::index_of(std::string_view name) const {
  auto i = find(name);
  if (!i) throw InputError("unknown symbol '" + std::string(name) + "'");
  return *i;
}

Signature parse_signature(std::string_view text) {
  Signature sig;
  std::size_t line_no = 0;
  for (const auto& raw : detail::split_lines(text)) {
    ++line_no;
    auto words = detail::split_words(detail::strip_comment(raw));
    if (words.empty()) continue;
    auto fail = [&](const std::string& msg) {
      throw ParseError(msg, line_no, 1);
    };
    if (words[0] != "op") fail("expected 'op <name> <arity> [infix <prec>]'");
    if (words.size() != 3 && words.size() != 5) fail("wrong number of fields in op declaration");
    Symbol s;
    s.name = words[1];
    auto arity = detail::parse_uint(words[2]);
    if (!arity) fail("arity must be a nonnegative integer");
    s.arity = *arity;
    if (words.size() == 5) {
      if (words[3] != "infix") fail("expected 'infix'");
      auto prec = detail::parse_int(words[4]);
      if (!prec) fail("precedence must be an integer");
      s.precedence = static_cast<int>(*prec);
    }
    try {
      sig.add(std::move(s));
    } catch (const InputError& e) {
      fail(e.what());
    }
  }
  return sig;
}

Signature load_signature_file(const std::string& path) {
  return parse_signature(detail::read_file(path));
}

std::string print_signature(const Signature& sig) {
  std::ostringstream out;
  for (const auto& s : sig.symbols()) {
    out << "op " << s.name << ' ' << s.arity;
    if (s.precedence) out << " infix " << *s.precedence;
    out << '\n';
  }
  return out.str();
}

}  // namespace uag
