#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "uag/algebra.hpp"
#include "uag/category.hpp"
#include "uag/equivalence.hpp"
#include "uag/geometry.hpp"
#include "uag/palgebra.hpp"

namespace uag::cli {

using Json = nlohmann::ordered_json;

Json points_json(const PointSet& a);
Json system_json(const EquationSystem& s, const Signature& sig);
Json lattice_json(const AlgebraicSetLattice& lat, const Signature& sig);
std::string lattice_dot(const AlgebraicSetLattice& lat);
Json separation_json(const SeparationResult& r);
Json verdict_json(const EquivalenceVerdict& v);
Json cross_validation_json(const CrossValidationReport& r, const Signature& sig);
Json palgebra_json(const StructureAlgebra& a);
Json category_json(const CategoryGraph& g, const Signature& sig);
/// Lists at most `max_listed` pairs of the bijection, in node order.
Json lattice_iso_json(const LatticeIsomorphismReport& r, const SemiinnerData& phi, const Signature& sig,
                      std::size_t max_listed);
Json duality_json(const DualityReport& r);

std::string point_text(const Point& p);

}  // namespace uag::cli
