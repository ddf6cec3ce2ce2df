#include "uag/identities.hpp"

#include <algorithm>

#include "tuples.hpp"
#include "uag/error.hpp"

namespace uag {

bool check_identity(const FiniteAlgebra& h, const Equation& e, const Caps& caps) {
  const std::size_t k = std::max(e.lhs.var_bound(), e.rhs.var_bound());
  return check_quasiidentity(h, EquationSystem(default_vars(k)), e, caps);
}

std::optional<Point> quasiidentity_counterexample(const FiniteAlgebra& h, const EquationSystem& premises,
                                                  const Equation& conclusion, const Caps& caps) {
  const std::size_t k = premises.num_vars();
  if (conclusion.lhs.var_bound() > k || conclusion.rhs.var_bound() > k) {
    throw MismatchError("conclusion uses a variable outside the premises' variable set");
  }
  PointSpace{h.size(), k}.count(caps.assignments);
  Point p(k, 0);
  do {
    bool premises_hold = true;
    for (const auto& eq : premises.equations()) {
      if (eval_term(eq.lhs, p, h) != eval_term(eq.rhs, p, h)) {
        premises_hold = false;
        break;
      }
    }
    if (premises_hold && eval_term(conclusion.lhs, p, h) != eval_term(conclusion.rhs, p, h)) return p;
  } while (detail::next_tuple(p, h.size()));
  return std::nullopt;
}

bool check_quasiidentity(const FiniteAlgebra& h, const EquationSystem& premises, const Equation& conclusion,
                         const Caps& caps) {
  return !quasiidentity_counterexample(h, premises, conclusion, caps).has_value();
}

}  // namespace uag
