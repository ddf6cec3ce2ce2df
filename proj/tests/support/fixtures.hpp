#pragma once

#include <string>

#include "uag/algebra.hpp"
#include "uag/palgebra.hpp"
#include "uag/parser.hpp"

namespace fixtures {

inline std::string data_path(const std::string& file) { return std::string(UAG_TEST_DATA) + "/" + file; }

inline uag::FiniteAlgebra load(const std::string& file) { return uag::load_algebra_file(data_path(file)); }

inline uag::FiniteAlgebra z2() { return load("z2.alg"); }
inline uag::FiniteAlgebra z3() { return load("z3.alg"); }
inline uag::FiniteAlgebra z4() { return load("z4.alg"); }
inline uag::FiniteAlgebra z2xz2() { return load("z2xz2.alg"); }
inline uag::FiniteAlgebra sl2() { return load("sl2.alg"); }
inline uag::FiniteAlgebra z2ring() { return load("z2ring.alg"); }

inline uag::StructureAlgebra palg(const std::string& name) {
  return uag::load_palgebra_file(data_path(name + ".palg"));
}

/// The same tables without the linear structure, forcing generic routines.
inline uag::FiniteAlgebra plain(const uag::FiniteAlgebra& h) {
  return uag::FiniteAlgebra(h.name(), h.signature_ptr(), h.size(), h.tables());
}

inline uag::Term term(const uag::FiniteAlgebra& h, const std::string& src, const uag::VarSet& vars) {
  return uag::parse_term(src, h.signature(), vars);
}

inline uag::Equation eq(const uag::FiniteAlgebra& h, const std::string& src, const uag::VarSet& vars) {
  return uag::parse_equation(src, h.signature(), vars);
}

inline uag::EquationSystem sys(const uag::FiniteAlgebra& h, const uag::VarSet& vars,
                               std::initializer_list<std::string> eqs) {
  uag::EquationSystem s(vars);
  for (const auto& e : eqs) s.add(eq(h, e, vars));
  return s;
}

}  // namespace fixtures
