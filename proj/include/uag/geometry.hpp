#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "uag/algebra.hpp"
#include "uag/config.hpp"
#include "uag/congruence.hpp"
#include "uag/point.hpp"
#include "uag/subpower.hpp"
#include "uag/term.hpp"

namespace uag {

/// A point set fixed by double closure, with where it came from.
struct AlgebraicSet {
  enum class Provenance { SolutionOf, ClosureOf };
  PointSet points;
  Provenance provenance = Provenance::SolutionOf;
  /// A system whose solution set is `points` (for SolutionOf: the given system).
  std::optional<EquationSystem> system;
};

/// T'_H: points satisfying every equation of T.
AlgebraicSet solution_set(const EquationSystem& t, const FiniteAlgebra& h, const Caps& caps = {});

/// Points where the two sides of e agree.
Mask agreement_mask(const Equation& e, const FiniteAlgebra& h, std::size_t num_vars, const Caps& caps = {});

/// A' as a membership oracle.
CongruenceOracle kernel_congruence(const PointSet& a, const FiniteAlgebra& h);

/// (w0, w0') in T''_H, decided as: w0 and w0' agree at every point of T'_H.
bool closure_membership(const EquationSystem& t, const FiniteAlgebra& h, const Term& w0, const Term& w0p,
                        const Caps& caps = {});

/// A'' by the factoring test applied to every point of H^X.
AlgebraicSet double_closure_points(const PointSet& a, const FiniteAlgebra& h, const Caps& caps = {});

bool is_algebraic(const PointSet& a, const FiniteAlgebra& h, const Caps& caps = {});

/// All algebraic sets of H^X ordered by inclusion.
class AlgebraicSetLattice {
 public:
  const PointSpace& space() const noexcept { return space_; }
  const VarSet& vars() const noexcept { return vars_; }
  /// Closed sets ordered by size, then lexicographically by point list.
  const std::vector<AlgebraicSet>& nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  /// Covering pairs (lower, upper), sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const noexcept { return covers_; }
  std::size_t top() const noexcept { return nodes_.size() - 1; }
  std::size_t bottom() const noexcept { return 0; }

  std::optional<std::size_t> find(const Mask& m) const;
  std::size_t meet(std::size_t i, std::size_t j) const;
  /// Smallest closed set containing both.
  std::size_t join(std::size_t i, std::size_t j) const;
  /// Smallest closed set containing m.
  std::size_t closure_of(const Mask& m) const;
  bool leq(std::size_t i, std::size_t j) const;

  /// Equations used by the defining systems; every node's system is a subset.
  const std::vector<Equation>& pool() const noexcept { return pool_; }
  const std::vector<Mask>& pool_masks() const noexcept { return pool_masks_; }
  /// Indices into pool() for node i.
  const std::vector<std::size_t>& defining(std::size_t i) const { return defining_[i]; }

 private:
  friend AlgebraicSetLattice lattice(const VarSet&, const FiniteAlgebra&, const Caps&);
  PointSpace space_;
  VarSet vars_;
  std::vector<AlgebraicSet> nodes_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::vector<Equation> pool_;
  std::vector<Mask> pool_masks_;
  std::vector<std::vector<std::size_t>> defining_;
  std::vector<std::pair<std::uint64_t, std::size_t>> lookup_;  // sorted (mask bits, node)
};

/// Exhaustive scan of all subsets of H^X; requires |H|^|X| <= caps.lattice_points.
AlgebraicSetLattice lattice(const VarSet& vars, const FiniteAlgebra& h, const Caps& caps = {});

/// Pairs (w_j, w_i), i <= j, of the depth-bounded term universe over T's
/// variables that belong to T''_H.
std::vector<std::pair<Term, Term>> closure_on_universe(const EquationSystem& t, const FiniteAlgebra& h,
                                                       const UniverseBound& bound, const Caps& caps = {});

/// Uint64 view of a mask with at most 64 bits.
std::uint64_t mask_bits(const Mask& m);
Mask bits_mask(std::uint64_t bits, std::size_t size);

}  // namespace uag
