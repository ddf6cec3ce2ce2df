#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "uag/algebra.hpp"
#include "uag/config.hpp"
#include "uag/linalg.hpp"
#include "uag/point.hpp"
#include "uag/term.hpp"

namespace uag {

/// Subalgebra of H^m generated by the given tuples, by exhaustive closure.
/// Every element carries a derivation, so it can be written as a term in
/// the generators.
class ExplicitSubpower {
 public:
  /// Called after each new element with its index and tuple; returning false
  /// stops generation early.
  using Observer = std::function<bool(std::size_t index, const Elem* tuple)>;

  ExplicitSubpower(const FiniteAlgebra& h, std::size_t m, const std::vector<std::vector<Elem>>& generators,
                   std::size_t cap, const Observer& observer = {});

  std::size_t size() const noexcept { return witnesses_.size(); }
  std::size_t width() const noexcept { return m_; }
  bool stopped_early() const noexcept { return stopped_; }
  const Elem* element(std::size_t i) const { return data_.data() + i * m_; }
  std::vector<Elem> tuple(std::size_t i) const { return {element(i), element(i) + m_}; }
  std::optional<std::size_t> find(const std::vector<Elem>& t) const;

  /// Term for element i, given terms for the generators.
  Term term(std::size_t i, const std::vector<Term>& generator_terms) const;

 private:
  struct Witness {
    bool generator;
    std::size_t index;  // generator number or symbol
    std::vector<std::size_t> args;
  };
  bool insert(const Elem* t, bool generator, std::size_t index, const std::vector<std::size_t>& args,
              std::size_t cap, const Observer& observer);
  std::optional<std::size_t> lookup(const Elem* t) const;

  std::size_t m_;
  std::size_t radix_;
  bool numeric_keys_;
  std::vector<Elem> data_;
  std::vector<Witness> witnesses_;
  std::unordered_map<std::uint64_t, std::size_t> numeric_index_;
  std::unordered_map<std::string, std::size_t> index_;
  bool stopped_ = false;
};

/// Subalgebra of H^m generated by the given tuples when H carries a linear
/// structure: the subspace of P^{dm} closed under the coordinatewise product
/// (and containing the unit tuple when H is unital). The basis consists of
/// "raw" monomials, each a generator, the unit, or a product of two earlier
/// raw monomials.
class LinearSubpower {
 public:
  LinearSubpower(const FiniteAlgebra& h, std::size_t m, const std::vector<std::vector<Elem>>& generators);

  std::size_t width() const noexcept { return m_; }
  std::size_t dimension() const noexcept { return span_.rank(); }
  const Span& span() const noexcept { return span_; }
  const LinearStructure& linear() const noexcept { return *lin_; }

  /// Digit vector of a tuple of H^m (coordinate j occupies digits j*d..j*d+d-1).
  FVec to_vector(const std::vector<Elem>& t) const;
  std::vector<Elem> to_tuple(const FVec& v) const;
  /// Digit positions belonging to the given coordinates.
  std::vector<std::size_t> digit_columns(const std::vector<std::size_t>& coords) const;

  /// Term for raw basis vector i, given terms for the generators.
  Term raw_term(std::size_t i, const std::vector<Term>& generator_terms) const;
  /// Term for sum_i c_i raw_i.
  Term combination_term(const FVec& coeffs, const std::vector<Term>& generator_terms) const;

 private:
  FVec multiply(const FVec& a, const FVec& b) const;

  struct Witness {
    enum Kind { Generator, Unit, Product } kind;
    std::size_t a = 0;
    std::size_t b = 0;
  };
  FiniteAlgebra h_;
  std::shared_ptr<const LinearStructure> lin_;
  std::size_t m_;
  Span span_;
  std::vector<Witness> witnesses_;
};

/// Outcome of the per-point factoring test.
struct FactoringResult {
  bool member = false;
  /// When not a member: terms w, w' that agree on every point of A but
  /// differ at the candidate.
  std::optional<std::pair<Term, Term>> witness;
  std::size_t generated = 0;  ///< elements (explicit) or dimension (linear) of the generated subalgebra
};

/// Decides mu in A'' by generating the subalgebra of H^{|A|+1} from the rows
/// r_i = (mu_1(x_i), ..., mu_k(x_i), mu(x_i)): mu belongs iff no two generated
/// tuples agree on the first |A| coordinates and differ in the last.
FactoringResult factoring_test(const FiniteAlgebra& h, const std::vector<Point>& a, const Point& mu,
                               const Caps& caps = {});

/// Term operations of arity k on H, stored as the subalgebra of H^{|H|^k}
/// generated by the projections. Decides A'' for every A in H^k at once:
/// A'' is the set of points where every pair of term operations agreeing on
/// A still agrees.
class ClosureEngine {
 public:
  ClosureEngine(const FiniteAlgebra& h, std::size_t num_vars, const Caps& caps = {});

  const PointSpace& space() const noexcept { return space_; }
  bool linear() const noexcept { return linear_ != nullptr; }
  /// Number of term operations (explicit) or the clone dimension (linear).
  std::size_t clone_measure() const;

  Mask closure(const Mask& a) const;
  /// An equation satisfied on A but failing at point index mu, if mu is not in A''.
  std::optional<Equation> separating_equation(const Mask& a, std::size_t mu) const;

 private:
  PointSpace space_;
  FiniteAlgebra h_;
  std::vector<Term> var_terms_;
  std::unique_ptr<ExplicitSubpower> explicit_;
  std::unique_ptr<LinearSubpower> linear_;
};

}  // namespace uag
