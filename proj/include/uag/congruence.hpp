#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>

#include "uag/algebra.hpp"
#include "uag/config.hpp"
#include "uag/point.hpp"
#include "uag/term.hpp"

namespace uag {

/// A congruence on W(X) given by a membership test. The backing data is
/// finite (a point, a point set, or a system) while the congruence itself
/// is an infinite set of term pairs. Copies share the backing data.
class CongruenceOracle {
 public:
  enum class Kind { KernelOf, KernelOfSet, ClosureOfSystem, Preimage };
  /// Map from terms over the oracle's variables to terms over the inner oracle's variables.
  using TermMap = std::function<Term(const Term&)>;

  /// Ker mu: pairs with equal value at the point.
  static CongruenceOracle kernel_of(const Point& p, const FiniteAlgebra& h);
  /// A' = intersection of Ker mu over mu in A (all pairs when A is empty).
  static CongruenceOracle kernel_of_set(const PointSet& a, const FiniteAlgebra& h);
  /// T''_H, decided as agreement on the solution set of T (computed once).
  static CongruenceOracle closure_of_system(const EquationSystem& t, const FiniteAlgebra& h, const Caps& caps = {});
  /// { (w, w') : inner.decide(map(w), map(w')) } over `source_vars` variables.
  static CongruenceOracle preimage(TermMap map, std::size_t source_vars, CongruenceOracle inner,
                                   std::string label = "preimage");

  bool decide(const Term& w, const Term& w2) const;
  std::size_t num_vars() const;
  Kind kind() const;
  std::string describe() const;

  /// For KernelOfSet and ClosureOfSystem: the point set whose kernel this is.
  const PointSet* points() const;

  struct Impl;

 private:
  explicit CongruenceOracle(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

}  // namespace uag
