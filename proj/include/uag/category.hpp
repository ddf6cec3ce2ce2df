#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uag/algebra.hpp"
#include "uag/config.hpp"
#include "uag/congruence.hpp"
#include "uag/field.hpp"
#include "uag/geometry.hpp"
#include "uag/point.hpp"
#include "uag/term.hpp"

namespace uag {

/// A homomorphism s: W(Y) -> W(X) of term algebras, given by one term over
/// X per variable of Y.
class Substitution {
 public:
  Substitution(std::size_t target_vars, std::vector<Term> images);
  static Substitution identity(std::size_t vars);

  std::size_t source_vars() const noexcept { return images_.size(); }
  std::size_t target_vars() const noexcept { return target_vars_; }
  const Term& image(std::size_t y) const { return images_[y]; }
  const std::vector<Term>& images() const noexcept { return images_; }

  /// w^s for a term w over Y.
  Term apply(const Term& w) const;

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  std::size_t target_vars_;
  std::vector<Term> images_;
};

/// outer o inner: first inner: W(Z) -> W(Y), then outer: W(Y) -> W(X).
Substitution compose(const Substitution& outer, const Substitution& inner);

/// The point nu o s over Y for a point nu over X.
Point induced_point_map(const Substitution& s, const Point& nu, const FiniteAlgebra& h);

/// Whether [s]: (X, A) -> (Y, B) is a morphism, i.e. every nu in A maps into B.
bool check_morphism(const Substitution& s, const PointSet& a, const PointSet& b, const FiniteAlgebra& h);

/// Cl_H(s)(T) = s^{-1} T on W(Y).
CongruenceOracle cl_preimage(const Substitution& s, const CongruenceOracle& t);

/// nu rho(T) nu' for endomorphisms of W(X): T identifies x^nu and x^nu' for every x.
bool rho(const CongruenceOracle& t, const Substitution& nu, const Substitution& nu2);

/// (w1, w2) in tau(rho(T)) through the canonical witness w = x_0,
/// nu = (x_0 -> w1), nu' = (x_0 -> w2), other variables fixed. Needs |X| >= 1.
bool tau_of_rho_membership(const CongruenceOracle& t, const Term& w1, const Term& w2);

/// A seeded sample of endomorphism pairs of W(X) with images of bounded depth.
class EndoPairWindow {
 public:
  EndoPairWindow(const Signature& sig, std::size_t vars, std::size_t max_depth, std::size_t count, std::uint64_t seed);

  const std::vector<std::pair<Substitution, Substitution>>& pairs() const noexcept { return pairs_; }
  /// Terms of the window universe, for the word w of the existential side.
  const std::vector<Term>& words() const noexcept { return words_; }
  std::size_t max_depth() const noexcept { return max_depth_; }
  std::uint64_t seed() const noexcept { return seed_; }

 private:
  std::size_t max_depth_;
  std::uint64_t seed_;
  std::vector<Term> words_;
  std::vector<std::pair<Substitution, Substitution>> pairs_;
};

struct TauSampleReport {
  std::size_t related_pairs = 0;  ///< sampled (nu, nu') with nu rho(T) nu'
  std::size_t checks = 0;         ///< (w, nu, nu') triples checked
  std::size_t failures = 0;       ///< triples with (w^nu, w^nu') outside T
};

/// Existential side of tau on a sample: every (w^nu, w^nu') with nu rho(T) nu'
/// must lie in T.
TauSampleReport tau_sample_check(const CongruenceOracle& t, const EndoPairWindow& window);

/// The semiinner automorphism of the category of free algebras determined
/// by sigma on the compiled signature: it is the identity on objects and
/// renames scalar_c to scalar_{sigma(c)} in every term.
class SemiinnerData {
 public:
  SemiinnerData(FieldAutomorphism sigma, const Signature& sig);

  const FieldAutomorphism& sigma() const noexcept { return sigma_; }
  SemiinnerData inverse() const;

  Term apply(const Term& t) const;
  Equation apply(const Equation& e) const;
  EquationSystem apply(const EquationSystem& s) const;
  Substitution apply(const Substitution& s) const;

 private:
  SemiinnerData(FieldAutomorphism sigma, std::vector<std::size_t> perm) : sigma_(std::move(sigma)), perm_(std::move(perm)) {}
  FieldAutomorphism sigma_;
  std::vector<std::size_t> perm_;
};

struct AlphaResult {
  EquationSystem image_generators;  ///< phi(S)
  CongruenceOracle image;           ///< closure over H2 of phi(S)
  std::size_t window_pairs = 0;     ///< window pairs compared with the formula route
  std::size_t formula_mismatches = 0;
  std::size_t sampled_checks = 0;   ///< sampled (w, phi nu, phi nu') triples
  std::size_t sampled_failures = 0;
  bool verified() const noexcept { return formula_mismatches == 0 && sampled_failures == 0; }
};

/// alpha(phi)_W on the closure of S over H1: the closure over H2 of phi(S),
/// compared on the window of H2 with tau(phi(rho(T))) and on sampled
/// endomorphism pairs.
AlphaResult alpha(const SemiinnerData& phi, const EquationSystem& s, const FiniteAlgebra& h1, const FiniteAlgebra& h2,
                  const UniverseBound& bound, std::size_t samples = 200, std::uint64_t seed = 0, const Caps& caps = {});

struct NaturalityReport {
  std::size_t pairs = 0;
  std::size_t mismatches = 0;
  std::optional<std::pair<Term, Term>> counterexample;
  bool passed() const noexcept { return mismatches == 0; }
};

/// Cl_{H2}(phi(s)) alpha_X (T) versus alpha_Y (Cl_{H1}(s) T) on the window of
/// H2 over Y, with T the closure of S over H1 and s: W(Y) -> W(X).
NaturalityReport naturality_check(const SemiinnerData& phi, const Substitution& s, const EquationSystem& t_gens,
                                  const FiniteAlgebra& h1, const FiniteAlgebra& h2, const UniverseBound& bound,
                                  const Caps& caps = {});

/// Whether T identifies s1(y) and s2(y) for all y exactly when alpha(T)
/// identifies phi(s1)(y) and phi(s2)(y) for all y.
bool compatibility_check(const SemiinnerData& phi, const Substitution& s1, const Substitution& s2,
                         const EquationSystem& t_gens, const FiniteAlgebra& h1, const FiniteAlgebra& h2,
                         const Caps& caps = {});

struct CompatibilitySampleReport {
  std::size_t samples = 0;
  std::size_t related = 0;  ///< pairs with mu_T s1 = mu_T s2
  std::size_t failures = 0;
};

/// compatibility_check on seeded substitution pairs W(X) -> W(X) with
/// images of depth <= max_depth. Half of the pairs are built to be related.
CompatibilitySampleReport compatibility_sample(const SemiinnerData& phi, const EquationSystem& t_gens,
                                               const FiniteAlgebra& h1, const FiniteAlgebra& h2,
                                               std::size_t max_depth, std::size_t count, std::uint64_t seed,
                                               const Caps& caps = {});

/// W(X)/T as the subalgebra of H^{T'} generated by the variable rows.
struct QuotientObject {
  std::size_t vars = 0;
  CongruenceOracle congruence;
  FiniteAlgebra model;
  std::vector<Term> witnesses;  ///< a term for every model element
  std::uint64_t fingerprint = 0;
};

/// Isomorphism invariant of a finite algebra: size and, per operation, the
/// sorted list of output-value multiplicities.
std::uint64_t table_fingerprint(const FiniteAlgebra& h);

/// Quotient model for T = A'. `reverse_generators` builds it from the
/// variable rows in reverse order.
QuotientObject quotient_object(const PointSet& a, const FiniteAlgebra& h, bool reverse_generators = false,
                               const Caps& caps = {});

struct DualityReport {
  bool set_closed = false;        ///< (A')' = A
  PointSet double_closure;        ///< (A')'
  std::size_t window_equations = 0;
  bool window_roots_match = false;  ///< roots of the A' window equal (A')'
  bool congruence_windows_match = false;  ///< A' equals T'' on the window for T = that window system
  std::size_t quotient_size = 0;
  std::uint64_t fingerprint = 0;
  bool fingerprint_stable = false;  ///< reversed generator order gives the same fingerprint
};

DualityReport duality_roundtrip(const PointSet& a, const FiniteAlgebra& h, const UniverseBound& bound,
                                const Caps& caps = {});

struct LatticeIsomorphismReport {
  std::size_t size1 = 0;
  std::size_t size2 = 0;
  std::vector<std::size_t> mapping;  ///< node of the first lattice -> node of the second
  std::vector<EquationSystem> generators;  ///< defining system of each first-lattice node
  bool total = false;       ///< every image is a node of the second lattice
  bool bijective = false;
  bool order_preserved = false;  ///< covers map to covers, both ways
  bool identity = false;    ///< every node maps to the same point set
  bool verified() const noexcept { return total && bijective && order_preserved; }
};

LatticeIsomorphismReport lattice_isomorphism_check(const SemiinnerData& phi, const VarSet& vars,
                                                   const FiniteAlgebra& h1, const FiniteAlgebra& h2,
                                                   const Caps& caps = {});

struct CategoryObject {
  std::size_t vars = 0;
  PointSet points;
};

struct CategoryMorphism {
  std::size_t from = 0;
  std::size_t to = 0;
  Substitution representative;
  std::vector<Point> point_map;  ///< images of the points of the source, in order
  std::size_t substitutions = 0;  ///< substitutions in the class within the bound
};

struct CategoryGraph {
  std::vector<CategoryObject> objects;
  std::vector<CategoryMorphism> morphisms;
};

/// Objects (X, A) for min_vars <= |X| <= max_vars with A algebraic, and
/// morphism classes [s] from substitutions with images of depth <= depth,
/// identified when their induced point maps agree on A.
CategoryGraph export_category(std::size_t min_vars, std::size_t max_vars, const FiniteAlgebra& h, std::size_t depth,
                              const Caps& caps = {});

std::string category_dot(const CategoryGraph& g, const FiniteAlgebra& h);

}  // namespace uag
