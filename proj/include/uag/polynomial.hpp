#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "uag/field.hpp"

namespace uag {

/// A monomial x_{i_1} ... x_{i_n} of the free associative algebra, as its
/// letter sequence (variable numbers, 1-based as written). Empty = 1.
struct AssocWord {
  std::vector<std::size_t> letters;

  /// Canonical order: by length, then lexicographically.
  friend bool operator<(const AssocWord& a, const AssocWord& b) {
    if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
    return a.letters < b.letters;
  }
  friend bool operator==(const AssocWord&, const AssocWord&) = default;
};

/// Noncommutative polynomial over GF(q): monomials in canonical order with
/// nonzero coefficients.
class Polynomial {
 public:
  explicit Polynomial(FieldPtr field) : field_(std::move(field)) {}

  const FieldPtr& field() const noexcept { return field_; }
  const std::map<AssocWord, FiniteField::Elem>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds c * w, collapsing like monomials and dropping zeros.
  void add_term(FiniteField::Elem c, const AssocWord& w);

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return *a.field_ == *b.field_ && a.terms_ == b.terms_;
  }

 private:
  FieldPtr field_;
  std::map<AssocWord, FiniteField::Elem> terms_;
};

/// Reverses every monomial; coefficients unchanged.
AssocWord mirror(const AssocWord& w);
Polynomial mirror(const Polynomial& p);

/// Sum of terms `c`, `x3`, `c*x1*x2`, ... separated by '+'. Coefficients
/// are field element indices; x<i> with i >= 1. Throws ParseError.
Polynomial parse_polynomial(std::string_view src, const FieldPtr& field);
/// Canonical order, coefficient 1 omitted on non-constant monomials, "0" for zero.
std::string print_polynomial(const Polynomial& p);

}  // namespace uag
