#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uag/field.hpp"
#include "uag/signature.hpp"
#include "uag/term.hpp"

namespace uag {

using Elem = std::uint32_t;
using SignaturePtr = std::shared_ptr<const Signature>;

/// Records that an algebra is a finite-dimensional algebra over a finite
/// field, compiled to tables. Element e encodes the coordinate vector
/// (a_0, ..., a_{d-1}) with e = sum_i a_i q^i. When present, subalgebras of
/// powers are exactly the subspaces closed under the product (and containing
/// the unit when one exists), which lets closure routines use linear algebra.
struct LinearStructure {
  FieldPtr field;
  std::size_t dim = 0;
  std::size_t add_op = 0;
  std::size_t neg_op = 0;
  std::size_t zero_op = 0;
  std::size_t mul_op = 0;
  std::optional<std::size_t> one_op;
  /// scalar_op_of[c]: the unary symbol acting as multiplication by c.
  std::vector<std::size_t> scalar_op_of;

  std::vector<FiniteField::Elem> digits(Elem e) const;
  Elem encode(const std::vector<FiniteField::Elem>& digits) const;
};

/// Carrier {0..n-1} with one total table per symbol. Table entry for
/// (a_1, ..., a_r) is at index sum_i a_i n^{r-i} (row-major). Copies share
/// the tables.
class FiniteAlgebra {
 public:
  FiniteAlgebra(std::string name, SignaturePtr sig, std::size_t size, std::vector<std::vector<Elem>> tables,
                std::shared_ptr<const LinearStructure> linear = nullptr);

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return size_; }
  const Signature& signature() const noexcept { return *sig_; }
  const SignaturePtr& signature_ptr() const noexcept { return sig_; }
  const std::vector<Elem>& table(std::size_t op) const { return (*tables_)[op]; }
  const std::vector<std::vector<Elem>>& tables() const noexcept { return *tables_; }
  const std::shared_ptr<const LinearStructure>& linear() const noexcept { return linear_; }

  Elem apply(std::size_t op, const Elem* args) const {
    std::size_t idx = 0;
    const std::size_t ar = (*sig_)[op].arity;
    for (std::size_t i = 0; i < ar; ++i) idx = idx * size_ + args[i];
    return (*tables_)[op][idx];
  }
  Elem apply(std::size_t op, const std::vector<Elem>& args) const { return apply(op, args.data()); }
  Elem constant(std::size_t op) const { return (*tables_)[op][0]; }

  FiniteAlgebra renamed(std::string name) const;

  /// Same signature and identical tables (names are ignored).
  bool same_tables(const FiniteAlgebra& other) const;

 private:
  std::string name_;
  SignaturePtr sig_;
  std::size_t size_;
  std::shared_ptr<const std::vector<std::vector<Elem>>> tables_;
  std::shared_ptr<const LinearStructure> linear_;
};

/// Throws MismatchError unless both algebras have equal signatures.
void require_same_signature(const FiniteAlgebra& a, const FiniteAlgebra& b);

/// Direct product. Pair (a, b) is encoded as a + |A| * b. Linear structure is
/// kept when both factors are linear over the same field.
FiniteAlgebra product(const FiniteAlgebra& a, const FiniteAlgebra& b);

/// Value of t at the assignment `point` (indexed by variable position).
Elem eval_term(const Term& t, const std::vector<Elem>& point, const FiniteAlgebra& h);

/// Values of t at every point of H^k, in lexicographic point order.
std::vector<Elem> term_values(const Term& t, const FiniteAlgebra& h, std::size_t num_vars);

/// Algebra file: `algebra <name> size <n> signature <sigfile>`, then for
/// each symbol `table <symbol>` followed by n^arity integers in row-major
/// order. The signature path is resolved relative to `base_dir`.
FiniteAlgebra parse_algebra(std::string_view text, const std::string& base_dir);
FiniteAlgebra load_algebra_file(const std::string& path);
/// Writes the algebra in the file format; `sig_file` is the header's signature path.
std::string print_algebra(const FiniteAlgebra& h, const std::string& sig_file);

}  // namespace uag
