#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace uag {

/// GF(p^k) with explicit tables. Element i encodes the residue
/// sum_j c_j t^j (mod f) with i = sum_j c_j p^j, where f is the smallest monic
/// irreducible polynomial of degree k over GF(p) in that same encoding.
class FiniteField {
 public:
  using Elem = std::uint32_t;

  /// Builds and exhaustively verifies the field. Requires p prime, k >= 1,
  /// p^k <= 256.
  static std::shared_ptr<const FiniteField> make(unsigned p, unsigned k);
  /// Parses "p^k" or "q" (a prime power).
  static std::shared_ptr<const FiniteField> parse(const std::string& spec);

  unsigned characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  std::size_t order() const noexcept { return q_; }
  std::string name() const;

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  /// Multiplicative inverse; a must be nonzero.
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }
  /// Smallest element generating the multiplicative group.
  Elem primitive() const noexcept { return primitive_; }
  /// Coefficients c_0..c_k of the defining polynomial (c_k = 1).
  const std::vector<unsigned>& modulus() const noexcept { return modulus_; }

  friend bool operator==(const FiniteField& a, const FiniteField& b) { return a.p_ == b.p_ && a.k_ == b.k_; }

 private:
  FiniteField() = default;
  unsigned p_ = 0;
  unsigned k_ = 0;
  std::size_t q_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<Elem> add_, mul_, neg_, inv_;
  Elem primitive_ = 0;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

/// sigma = Frobenius^exponent; acts as a permutation of the field elements.
class FieldAutomorphism {
 public:
  using Elem = FiniteField::Elem;

  static FieldAutomorphism identity(FieldPtr field) { return frobenius_power(std::move(field), 0); }
  static FieldAutomorphism frobenius_power(FieldPtr field, unsigned exponent);

  const FieldPtr& field() const noexcept { return field_; }
  unsigned exponent() const noexcept { return exponent_; }
  const std::vector<Elem>& permutation() const noexcept { return perm_; }
  Elem operator()(Elem a) const { return perm_[a]; }
  bool is_identity() const noexcept { return exponent_ == 0; }

  FieldAutomorphism inverse() const;
  /// (*this) o other.
  FieldAutomorphism compose(const FieldAutomorphism& other) const;
  /// "id", "frob", or "frob^e".
  std::string name() const;

  friend bool operator==(const FieldAutomorphism& a, const FieldAutomorphism& b) {
    return *a.field_ == *b.field_ && a.exponent_ == b.exponent_;
  }

 private:
  FieldPtr field_;
  unsigned exponent_ = 0;
  std::vector<Elem> perm_;
};

/// Aut(GF(p^k)) as Frobenius powers 0..k-1, ascending.
std::vector<FieldAutomorphism> automorphism_group(const FieldPtr& field);

/// Parses "id", "frob", "frob^e" (exponent taken mod k).
FieldAutomorphism parse_automorphism(const std::string& spec, const FieldPtr& field);

}  // namespace uag
