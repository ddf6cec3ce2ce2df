#pragma once

#include <cstddef>
#include <vector>

#include "uag/algebra.hpp"
#include "uag/config.hpp"
#include "uag/point.hpp"
#include "uag/term.hpp"

namespace uag {

/// The depth-bounded term universe over k variables, taken modulo equality
/// of term operations on a list of algebras (one signature). Each class is
/// represented by its first term in universe order (see enumerate_terms);
/// classes are built from representatives only, which yields exactly those
/// first terms. Every closure, solution-set and quasiidentity question about
/// a window term depends only on its class.
class TermWindow {
 public:
  TermWindow(std::vector<FiniteAlgebra> algebras, std::size_t num_vars, std::size_t max_depth, const Caps& caps = {},
             std::size_t max_terms = 200'000);

  std::size_t size() const noexcept { return terms_.size(); }
  std::size_t num_vars() const noexcept { return num_vars_; }
  std::size_t max_depth() const noexcept { return max_depth_; }
  const Term& term(std::size_t i) const { return terms_[i]; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t algebra_count() const noexcept { return algebras_.size(); }
  const FiniteAlgebra& algebra(std::size_t a) const { return algebras_[a]; }
  const PointSpace& space(std::size_t a) const { return spaces_[a]; }

  /// Values of term i at every point of algebra a's space.
  const Elem* values(std::size_t i, std::size_t a) const { return data_.data() + i * stride_ + offsets_[a]; }
  /// Points of algebra a where terms i and j agree.
  Mask agreement(std::size_t i, std::size_t j, std::size_t a) const;

 private:
  std::vector<FiniteAlgebra> algebras_;
  std::vector<PointSpace> spaces_;
  std::vector<std::size_t> offsets_;
  std::size_t stride_ = 0;
  std::size_t num_vars_;
  std::size_t max_depth_;
  std::vector<Term> terms_;
  std::vector<Elem> data_;
};

}  // namespace uag
