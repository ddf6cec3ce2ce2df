#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uag/algebra.hpp"
#include "uag/config.hpp"
#include "uag/field.hpp"

namespace uag {

/// Finite-dimensional algebra over GF(q) given by structure constants
/// e_i e_j = sum_k c_ij^k e_k, together with a twist exponent e: the scalar
/// action is lambda o a = sigma^{-1}(lambda) a with sigma = Frobenius^e.
/// Vectors are coordinate lists of length dim.
class StructureAlgebra {
 public:
  enum class Kind { Plain, Associative, Lie };
  using Vector = std::vector<FiniteField::Elem>;

  /// `constants[(i * dim + j) * dim + k]` = c_ij^k. Verifies every declared
  /// flag on basis triples and throws InputError naming the first failure.
  StructureAlgebra(std::string name, FieldPtr field, std::size_t dim, std::vector<FiniteField::Elem> constants,
                   Kind kind = Kind::Plain, bool commutative = false, std::optional<Vector> unit = std::nullopt,
                   unsigned twist = 0, std::vector<std::string> basis = {});

  const std::string& name() const noexcept { return name_; }
  const FieldPtr& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  Kind kind() const noexcept { return kind_; }
  bool associative() const noexcept { return kind_ == Kind::Associative; }
  bool lie() const noexcept { return kind_ == Kind::Lie; }
  bool commutative() const noexcept { return commutative_; }
  const std::optional<Vector>& unit() const noexcept { return unit_; }
  /// Exponent of the Frobenius power sigma in lambda o a = sigma^{-1}(lambda) a.
  unsigned twist_exponent() const noexcept { return twist_; }
  const std::vector<std::string>& basis() const noexcept { return basis_; }
  const std::vector<FiniteField::Elem>& constants() const noexcept { return constants_; }
  FiniteField::Elem constant(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_[(i * dim_ + j) * dim_ + k];
  }

  Vector multiply(const Vector& a, const Vector& b) const;
  Vector add(const Vector& a, const Vector& b) const;
  /// The twisted scalar action lambda o a.
  Vector scale(FiniteField::Elem lambda, const Vector& a) const;
  std::size_t carrier_size() const;

  StructureAlgebra renamed(std::string name) const;

  /// Same field, dimension, constants, flags, unit and twist (names and
  /// basis labels are ignored).
  bool same_structure(const StructureAlgebra& other) const;

 private:
  std::string name_;
  FieldPtr field_;
  std::size_t dim_;
  std::vector<FiniteField::Elem> constants_;
  Kind kind_;
  bool commutative_;
  std::optional<Vector> unit_;
  unsigned twist_;
  std::vector<std::string> basis_;
};

/// Operation tables over the carrier GF(q)^dim, element index sum_i a_i q^i.
/// Signature: `+` (infix 1), `*` (infix 2, the bracket for Lie algebras),
/// unary `-`, constant `0`, constant `1` when unital, and unary
/// `scalar_0 .. scalar_{q-1}` where scalar_c is the twisted action of the
/// field element with index c. Throws CapExceeded past caps.structure_carrier.
FiniteAlgebra compile(const StructureAlgebra& a, const Caps& caps = {});

/// A^sigma: same carrier and product, scalar action precomposed with sigma^{-1}.
StructureAlgebra twist(const StructureAlgebra& a, const FieldAutomorphism& sigma);

/// A*: product a o b = ba. Throws InputError unless A is associative.
StructureAlgebra opposite(const StructureAlgebra& a);

/// First sigma in Aut(P) (ascending Frobenius powers) with compile(A1^sigma)
/// geometrically equivalent to compile(A2).
std::optional<FieldAutomorphism> twisted_equivalent(const StructureAlgebra& a1, const StructureAlgebra& a2,
                                                    const Caps& caps = {});

struct AlmostWitness {
  FieldAutomorphism sigma;
  bool opposite_used = false;
};

/// Twisted equivalence of (A1, A2), else of (A1*, A2). Associative inputs only.
std::optional<AlmostWitness> almost_equivalent(const StructureAlgebra& a1, const StructureAlgebra& a2,
                                               const Caps& caps = {});

/// Base-q digit string, coordinate 0 first: digits 0-9 then a-z for q <= 36,
/// '.'-separated decimal indices otherwise.
std::string format_vector(const StructureAlgebra::Vector& v, std::size_t q);
StructureAlgebra::Vector parse_vector(std::string_view s, std::size_t q, std::size_t dim);

/// `palgebra <name> field <p^k> dim <d> [assoc|lie] [comm] [unital <vector>] [twist <e>]`,
/// an optional `basis <label>...` line, then d^2 lines (i major, j minor)
/// of the d field indices c_ij^0 .. c_ij^{d-1}. `#` starts a comment.
StructureAlgebra parse_palgebra(std::string_view text);
StructureAlgebra load_palgebra_file(const std::string& path);
std::string print_palgebra(const StructureAlgebra& a);

}  // namespace uag
