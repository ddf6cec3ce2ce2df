#pragma once

#include <cstddef>
#include <vector>

#include "uag/algebra.hpp"
#include "uag/config.hpp"

namespace uag {

/// A map carrier(A) -> carrier(B), f[a] = image of a.
using ElemMap = std::vector<Elem>;

/// True iff f commutes with every operation table on every argument tuple.
bool is_homomorphism(const ElemMap& f, const FiniteAlgebra& a, const FiniteAlgebra& b);

/// Elements derivable from a generating set, with one derivation per
/// non-generator element (operation applied to earlier elements).
struct GenerationSchedule {
  struct Step {
    Elem element;
    std::size_t op;
    std::vector<Elem> args;
  };
  std::vector<Elem> generators;
  std::vector<Step> steps;  ///< constants first, then derived elements in discovery order
};

/// Greedy generating set of A (smallest element not yet generated, repeatedly)
/// together with a derivation of every element.
GenerationSchedule generating_schedule(const FiniteAlgebra& a);

/// All homomorphisms A -> B in lexicographic order of their value lists.
/// Searches over images of a greedy generating set; throws CapExceeded when
/// |B|^|generators| exceeds caps.hom_candidates.
std::vector<ElemMap> enumerate_homs(const FiniteAlgebra& a, const FiniteAlgebra& b, const Caps& caps = {});

}  // namespace uag
