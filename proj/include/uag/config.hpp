#pragma once

#include <cstddef>
#include <cstdint>

namespace uag {

/// Enumeration limits. Every exhaustive routine checks the relevant cap before
/// it starts and throws CapExceeded instead of running unbounded.
struct Caps {
  std::size_t assignments = 1'000'000;  ///< |H|^|X| for point enumeration
  std::size_t lattice_points = 16;      ///< |H|^|X| for the exhaustive subset scan
  std::size_t hom_candidates = 1'000'000;
  std::size_t subpower_elements = 1u << 16;
  std::size_t structure_carrier = 4096;  ///< q^d when compiling P-algebras
};

/// Finite window onto the (infinite) term algebra.
struct UniverseBound {
  std::size_t max_depth = 2;
  std::size_t max_vars = 2;
  std::size_t max_system_size = 2;
  std::size_t max_terms = 200'000;
  std::size_t max_pairs = 50'000'000;
};

}  // namespace uag
