#include "uag/term.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "uag/error.hpp"

namespace uag {

Term Term::var(std::size_t index) {
  return Term(std::make_shared<const Node>(Node{true, index, {}, 0, 1, index + 1}));
}

Term Term::app(std::size_t symbol, std::vector<Term> args) {
  std::size_t depth = 0;
  std::size_t size = 1;
  std::size_t bound = 0;
  for (const auto& a : args) {
    depth = std::max(depth, a.depth() + 1);
    size += a.size();
    bound = std::max(bound, a.var_bound());
  }
  return Term(std::make_shared<const Node>(Node{false, symbol, std::move(args), depth, size, bound}));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_var() != b.is_var() || a.index() != b.index() || a.size() != b.size()) return false;
  return a.args() == b.args();
}

bool operator<(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return false;
  if (a.is_var() != b.is_var()) return a.is_var();
  if (a.index() != b.index()) return a.index() < b.index();
  return std::lexicographical_compare(a.args().begin(), a.args().end(), b.args().begin(), b.args().end());
}

EquationSystem::EquationSystem(VarSet vars, const std::vector<Equation>& eqs) : vars_(std::move(vars)) {
  for (const auto& e : eqs) add(e);
}

bool EquationSystem::add(Equation e) {
  if (e.lhs.var_bound() > vars_.size() || e.rhs.var_bound() > vars_.size()) {
    throw MismatchError("equation uses a variable outside the system's variable set");
  }
  if (contains(e)) return false;
  eqs_.push_back(std::move(e));
  return true;
}

bool EquationSystem::contains(const Equation& e) const {
  return std::find(eqs_.begin(), eqs_.end(), e) != eqs_.end();
}

bool operator==(const EquationSystem& a, const EquationSystem& b) {
  if (a.vars_ != b.vars_ || a.eqs_.size() != b.eqs_.size()) return false;
  auto x = a.eqs_;
  auto y = b.eqs_;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

namespace {

void print_into(std::ostringstream& out, const Term& t, const Signature& sig, const VarSet& vars) {
  if (t.is_var()) {
    if (t.index() >= vars.size()) throw MismatchError("variable index out of range while printing");
    out << vars[t.index()];
    return;
  }
  const Symbol& s = sig[t.index()];
  if (s.infix()) {
    const int p = *s.precedence;
    auto child = [&](const Term& c, bool right) {
      bool parens = false;
      if (!c.is_var() && sig[c.index()].infix()) {
        int cp = *sig[c.index()].precedence;
        parens = right ? cp <= p : cp < p;
      }
      if (parens) out << '(';
      print_into(out, c, sig, vars);
      if (parens) out << ')';
    };
    child(t.args()[0], false);
    out << s.name;
    child(t.args()[1], true);
    return;
  }
  out << s.name;
  if (s.arity == 0) return;
  out << '(';
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    if (i) out << ',';
    print_into(out, t.args()[i], sig, vars);
  }
  out << ')';
}

}  // namespace

std::string print_term(const Term& t, const Signature& sig, const VarSet& vars) {
  std::ostringstream out;
  print_into(out, t, sig, vars);
  return out.str();
}

std::string print_equation(const Equation& e, const Signature& sig, const VarSet& vars) {
  return print_term(e.lhs, sig, vars) + " = " + print_term(e.rhs, sig, vars);
}

std::string print_system(const EquationSystem& sys, const Signature& sig) {
  std::ostringstream out;
  out << "vars";
  for (const auto& v : sys.vars()) out << ' ' << v;
  out << '\n';
  for (const auto& e : sys.equations()) out << print_equation(e, sig, sys.vars()) << '\n';
  return out.str();
}

Term rename_symbols(const Term& t, const std::vector<std::size_t>& perm) {
  if (t.is_var()) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const auto& a : t.args()) args.push_back(rename_symbols(a, perm));
  return Term::app(perm.at(t.index()), std::move(args));
}

std::vector<Term> enumerate_terms(const Signature& sig, std::size_t num_vars, std::size_t max_depth,
                                  std::size_t max_terms) {
  std::vector<Term> terms;
  auto push = [&](Term t) {
    if (terms.size() >= max_terms) {
      throw CapExceeded("term universe", std::numeric_limits<std::size_t>::max(), max_terms);
    }
    terms.push_back(std::move(t));
  };
  for (std::size_t v = 0; v < num_vars; ++v) push(Term::var(v));
  for (std::size_t s = 0; s < sig.size(); ++s) {
    if (sig[s].arity == 0) push(Term::app(s));
  }
  std::size_t prev_begin = 0;  // first index of depth d-1
  for (std::size_t d = 1; d <= max_depth; ++d) {
    const std::size_t prev_end = terms.size();  // terms [0, prev_end) have depth <= d-1
    for (std::size_t s = 0; s < sig.size(); ++s) {
      const std::size_t ar = sig[s].arity;
      if (ar == 0 || prev_end == 0) continue;
      std::vector<std::size_t> idx(ar, 0);
      bool done = false;
      while (!done) {
        bool has_top = false;
        for (auto i : idx) has_top = has_top || i >= prev_begin;
        if (has_top) {
          std::vector<Term> args;
          args.reserve(ar);
          for (auto i : idx) args.push_back(terms[i]);
          push(Term::app(s, std::move(args)));
        }
        std::size_t pos = ar;
        while (true) {
          if (pos == 0) { done = true; break; }
          --pos;
          if (++idx[pos] < prev_end) break;
          idx[pos] = 0;
        }
      }
    }
    prev_begin = prev_end;
    if (terms.size() == prev_end) break;
  }
  return terms;
}

VarSet default_vars(std::size_t count) {
  static const char* base[] = {"x", "y", "z"};
  VarSet vars;
  for (std::size_t i = 0; i < count; ++i) {
    vars.push_back(i < 3 ? std::string(base[i]) : "x" + std::to_string(i));
  }
  return vars;
}

}  // namespace uag
