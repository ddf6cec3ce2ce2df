#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "uag/algebra.hpp"
#include "uag/config.hpp"
#include "uag/homomorphism.hpp"
#include "uag/point.hpp"
#include "uag/term.hpp"

namespace uag {

/// Homomorphisms H1 -> H2 that jointly separate the points of H1, so that
/// H1 embeds into H2^m with m = homs.size().
struct EmbeddingCertificate {
  std::vector<ElemMap> homs;
  std::size_t exponent() const noexcept { return homs.size(); }
};

/// Outcome of separates(H1, H2): a certificate, or the first pair (a, b)
/// (lexicographic, a < b) identified by every homomorphism.
struct SeparationResult {
  std::optional<EmbeddingCertificate> certificate;
  std::optional<std::pair<Elem, Elem>> counterexample;
  std::size_t hom_count = 0;
  bool separated() const noexcept { return certificate.has_value(); }
};

/// Whether the natural map H1 -> H2^{Hom(H1,H2)} is injective.
SeparationResult separates(const FiniteAlgebra& h1, const FiniteAlgebra& h2, const Caps& caps = {});

struct EquivalenceVerdict {
  bool equivalent = false;
  SeparationResult forward;   ///< H1 into a power of H2
  SeparationResult backward;  ///< H2 into a power of H1
};

/// Two finite algebras are geometrically equivalent iff each embeds into a
/// direct power of the other (see docs/finite-equivalence.md).
EquivalenceVerdict geometrically_equivalent(const FiniteAlgebra& h1, const FiniteAlgebra& h2, const Caps& caps = {});

/// A system T and pair (w0, w0') with (w0, w0') in T'' over exactly one algebra.
struct Distinction {
  EquationSystem system;
  Term w0;
  Term w0p;
  bool in_first = false;   ///< membership in the closure over H1
  bool in_second = false;  ///< membership in the closure over H2
  std::size_t vars = 0;
  std::size_t depth = 0;
};

struct WindowStats {
  std::size_t vars = 0;
  std::size_t depth = 0;
  std::size_t terms = 0;           ///< term classes in the joint window
  std::size_t equations = 0;       ///< equation classes (joint agreement masks)
  std::size_t systems = 0;         ///< system classes (joint solution sets)
  std::size_t checks = 0;          ///< (system, pair) class checks performed
};

struct CrossValidationReport {
  bool agreement = true;
  std::optional<Distinction> distinction;
  std::vector<WindowStats> windows;
  UniverseBound bound;
};

/// Compares T'' membership over H1 and H2 for every system of at most
/// bound.max_system_size equations and every pair in the window, for
/// |X| = 1..bound.max_vars and depth 0..bound.max_depth in that order.
/// Stops at the first distinction.
CrossValidationReport cross_validate_equivalence(const FiniteAlgebra& h1, const FiniteAlgebra& h2,
                                                 const UniverseBound& bound, const Caps& caps = {});

/// First window pair (over T's variables, depth <= bound.max_depth) whose
/// membership in T'' differs between H1 and H2.
std::optional<Distinction> find_distinction_for_system(const FiniteAlgebra& h1, const FiniteAlgebra& h2,
                                                       const EquationSystem& t, const UniverseBound& bound,
                                                       const Caps& caps = {});

/// A nonempty finite list of algebras over one signature.
class FiniteClass {
 public:
  explicit FiniteClass(std::vector<FiniteAlgebra> algebras);
  const std::vector<FiniteAlgebra>& algebras() const noexcept { return algebras_; }

 private:
  std::vector<FiniteAlgebra> algebras_;
};

/// (w0, w0') in T^X, the intersection of T''_H over H in the class.
bool class_closure_membership(const FiniteClass& cls, const EquationSystem& t, const Term& w0, const Term& w0p,
                              const Caps& caps = {});

/// Greedy T0 subset of T with the same solution set: keep an equation when it
/// shrinks the running solution set, then drop any kept equation that turns
/// out to be redundant.
EquationSystem finite_basis(const EquationSystem& t, const FiniteAlgebra& h, const Caps& caps = {});

struct DirectedUnionReport {
  std::vector<std::size_t> solution_sizes;  ///< |T_i'| per member
  std::size_t stabilization_index = 0;      ///< 1-based index after which T_i' is constant
  std::size_t strict_steps = 0;             ///< number of strict shrinks along the chain
  std::size_t point_count = 0;              ///< |H|^|X|
  std::size_t window_terms = 0;
  std::size_t window_pairs_in_union = 0;    ///< pairs of the window in (union T_i)''
  bool union_closed = false;  ///< union of the members' closure windows equals the union's closure window
  bool stable_matches = false;  ///< the stable member's closure window equals the union's closure window
};

/// Checks on a bounded window that the union of an increasing chain of
/// closed congruences T_1'' <= T_2'' <= ... is closed. Throws InputError when
/// some T_{i+1}' is not contained in T_i'.
DirectedUnionReport directed_union_demo(const std::vector<EquationSystem>& chain, const FiniteAlgebra& h,
                                        const UniverseBound& bound, const Caps& caps = {});

struct IdentityComparison {
  bool agree = true;
  std::optional<Equation> counterexample;
  VarSet vars;
  bool holds_in_first = false;
};

/// Compares identities of the window (|X| = 1..max_vars, depth <= max_depth).
IdentityComparison same_identities_window(const FiniteAlgebra& h1, const FiniteAlgebra& h2,
                                          const UniverseBound& bound, const Caps& caps = {});

}  // namespace uag
