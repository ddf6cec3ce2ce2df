#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "uag/signature.hpp"

namespace uag {

/// Ordered finite variable set X; a variable is referred to by its position.
using VarSet = std::vector<std::string>;

/// Element of the absolutely free term algebra W(X): a variable or an
/// application of a symbol to arity-many subterms. Immutable; copies share nodes.
class Term {
 public:
  static Term var(std::size_t index);
  static Term app(std::size_t symbol, std::vector<Term> args = {});

  bool is_var() const noexcept { return node_->is_var; }
  /// Variable position for a variable, symbol index for an application.
  std::size_t index() const noexcept { return node_->index; }
  const std::vector<Term>& args() const noexcept { return node_->args; }

  std::size_t depth() const noexcept { return node_->depth; }
  std::size_t size() const noexcept { return node_->size; }
  /// Largest variable index occurring plus one (0 for ground terms).
  std::size_t var_bound() const noexcept { return node_->var_bound; }

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }
  /// Total order: variables before applications; variables by index;
  /// applications by symbol index, then arguments lexicographically.
  friend bool operator<(const Term& a, const Term& b);

 private:
  struct Node {
    bool is_var;
    std::size_t index;
    std::vector<Term> args;
    std::size_t depth;
    std::size_t size;
    std::size_t var_bound;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Equation {
  Term lhs;
  Term rhs;

  bool trivial() const { return lhs == rhs; }
  friend bool operator==(const Equation& a, const Equation& b) {
    return a.lhs == b.lhs && a.rhs == b.rhs;
  }
  friend bool operator<(const Equation& a, const Equation& b) {
    if (a.lhs != b.lhs) return a.lhs < b.lhs;
    return a.rhs < b.rhs;
  }
};

/// A finite set T of equations over the variable set X. Insertion order is
/// kept (later duplicates are dropped); equality is set equality.
class EquationSystem {
 public:
  EquationSystem() = default;
  explicit EquationSystem(VarSet vars) : vars_(std::move(vars)) {}
  EquationSystem(VarSet vars, const std::vector<Equation>& eqs);

  /// Returns false if the equation was already present. Throws MismatchError
  /// when a side mentions a variable outside X.
  bool add(Equation e);

  const VarSet& vars() const noexcept { return vars_; }
  std::size_t num_vars() const noexcept { return vars_.size(); }
  const std::vector<Equation>& equations() const noexcept { return eqs_; }
  std::size_t size() const noexcept { return eqs_.size(); }
  bool empty() const noexcept { return eqs_.empty(); }
  bool contains(const Equation& e) const;

  friend bool operator==(const EquationSystem& a, const EquationSystem& b);

 private:
  VarSet vars_;
  std::vector<Equation> eqs_;
};

/// Canonical text form; parse_term(print_term(t)) == t.
std::string print_term(const Term& t, const Signature& sig, const VarSet& vars);
std::string print_equation(const Equation& e, const Signature& sig, const VarSet& vars);
std::string print_system(const EquationSystem& sys, const Signature& sig);

/// Applies `f` to each variable occurrence (by index) and rebuilds the term.
template <class F>
Term replace_vars(const Term& t, F&& f) {
  if (t.is_var()) return f(t.index());
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const auto& a : t.args()) args.push_back(replace_vars(a, f));
  return Term::app(t.index(), std::move(args));
}

/// Renames every symbol occurrence through `perm` (symbol index -> symbol index).
Term rename_symbols(const Term& t, const std::vector<std::size_t>& perm);

/// All terms over `num_vars` variables of depth <= max_depth, in universe
/// order: by depth; at depth 0 variables then constants; at depth d > 0 by
/// symbol declaration order, then argument tuples in lexicographic universe
/// order (at least one argument of depth d-1). Throws CapExceeded past max_terms.
std::vector<Term> enumerate_terms(const Signature& sig, std::size_t num_vars,
                                  std::size_t max_depth, std::size_t max_terms);

/// Default variable names: x, y, z, then x3, x4, ...
VarSet default_vars(std::size_t count);

}  // namespace uag
