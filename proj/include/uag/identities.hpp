#pragma once

#include <optional>

#include "uag/algebra.hpp"
#include "uag/config.hpp"
#include "uag/point.hpp"
#include "uag/term.hpp"

namespace uag {

/// True iff e holds under every assignment of its variables in H.
bool check_identity(const FiniteAlgebra& h, const Equation& e, const Caps& caps = {});

/// First assignment (lexicographic, over the premises' variable set) that
/// satisfies every premise and violates the conclusion, if any.
std::optional<Point> quasiidentity_counterexample(const FiniteAlgebra& h, const EquationSystem& premises,
                                                  const Equation& conclusion, const Caps& caps = {});

/// True iff every assignment satisfying all premises satisfies the conclusion.
bool check_quasiidentity(const FiniteAlgebra& h, const EquationSystem& premises, const Equation& conclusion,
                         const Caps& caps = {});

}  // namespace uag
