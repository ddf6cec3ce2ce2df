#include "uag/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "uag/error.hpp"

namespace uag {

void Polynomial::add_term(FiniteField::Elem c, const AssocWord& w) {
  if (c >= field_->order()) throw InputError("coefficient outside " + field_->name());
  if (c == 0) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  it->second = field_->add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial out = *this;
  for (const auto& [w, c] : other.terms_) out.add_term(c, w);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  Polynomial out(field_);
  for (const auto& [u, a] : terms_) {
    for (const auto& [v, b] : other.terms_) {
      AssocWord uv = u;
      uv.letters.insert(uv.letters.end(), v.letters.begin(), v.letters.end());
      out.add_term(field_->mul(a, b), uv);
    }
  }
  return out;
}

AssocWord mirror(const AssocWord& w) {
  AssocWord out = w;
  std::reverse(out.letters.begin(), out.letters.end());
  return out;
}

Polynomial mirror(const Polynomial& p) {
  Polynomial out(p.field());
  for (const auto& [w, c] : p.terms()) out.add_term(c, mirror(w));
  return out;
}

Polynomial parse_polynomial(std::string_view src, const FieldPtr& field) {
  Polynomial out(field);
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> void { throw ParseError(msg, 1, pos + 1); };
  auto skip = [&] {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  };
  auto number = [&]() -> std::size_t {
    const std::size_t start = pos;
    std::size_t v = 0;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
      v = v * 10 + static_cast<std::size_t>(src[pos] - '0');
      if (v > 1'000'000) {
        pos = start;
        fail("number too large");
      }
      ++pos;
    }
    if (pos == start) fail("expected a number");
    return v;
  };
  skip();
  if (pos == src.size()) fail("empty polynomial");
  while (true) {
    FiniteField::Elem coeff = 1;
    AssocWord word;
    while (true) {
      skip();
      if (pos < src.size() && src[pos] == 'x') {
        ++pos;
        const std::size_t at = pos;
        const std::size_t i = number();
        if (i == 0) {
          pos = at;
          fail("variables are numbered from x1");
        }
        word.letters.push_back(i);
      } else if (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
        const std::size_t at = pos;
        const std::size_t c = number();
        if (c >= field->order()) {
          pos = at;
          fail(std::to_string(c) + " is not an element of " + field->name());
        }
        coeff = field->mul(coeff, static_cast<FiniteField::Elem>(c));
      } else {
        fail("expected a coefficient or a variable x<i>");
      }
      skip();
      if (pos < src.size() && src[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    out.add_term(coeff, word);
    if (pos == src.size()) break;
    if (src[pos] != '+') fail("expected '+' or '*'");
    ++pos;
  }
  return out;
}

std::string print_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
      if (i) mono += '*';
      mono += 'x' + std::to_string(w.letters[i]);
    }
    if (w.letters.empty()) {
      out += std::to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += std::to_string(c) + '*' + mono;
    }
  }
  return out;
}

}  // namespace uag
