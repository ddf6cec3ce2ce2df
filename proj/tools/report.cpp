#include "report.hpp"

#include <algorithm>
#include <sstream>

namespace uag::cli {

namespace {

Json equations_json(const std::vector<Equation>& eqs, const Signature& sig, const VarSet& vars) {
  Json out = Json::array();
  for (const auto& e : eqs) out.push_back(print_equation(e, sig, vars));
  return out;
}

Json vector_json(const StructureAlgebra::Vector& v) {
  Json out = Json::array();
  for (auto c : v) out.push_back(c);
  return out;
}

}  // namespace

std::string point_text(const Point& p) {
  std::ostringstream ss;
  ss << '(';
  for (std::size_t i = 0; i < p.size(); ++i) ss << (i ? "," : "") << p[i];
  ss << ')';
  return ss.str();
}

Json points_json(const PointSet& a) {
  Json out = Json::array();
  for (const auto& p : a.points()) out.push_back(p);
  return out;
}

Json system_json(const EquationSystem& s, const Signature& sig) {
  Json out;
  out["vars"] = s.vars();
  out["equations"] = equations_json(s.equations(), sig, s.vars());
  return out;
}

Json lattice_json(const AlgebraicSetLattice& lat, const Signature& sig) {
  Json out;
  out["vars"] = lat.vars();
  out["carrier"] = lat.space().carrier;
  Json nodes = Json::array();
  for (std::size_t i = 0; i < lat.size(); ++i) {
    Json n;
    n["id"] = i;
    n["size"] = lat.nodes()[i].points.size();
    n["points"] = points_json(lat.nodes()[i].points);
    std::vector<Equation> defining;
    for (auto e : lat.defining(i)) defining.push_back(lat.pool()[e]);
    n["defining"] = equations_json(defining, sig, lat.vars());
    nodes.push_back(std::move(n));
  }
  out["nodes"] = std::move(nodes);
  Json edges = Json::array();
  for (const auto& [lo, hi] : lat.covers()) edges.push_back(Json::array({lo, hi}));
  out["edges"] = std::move(edges);
  return out;
}

std::string lattice_dot(const AlgebraicSetLattice& lat) {
  std::ostringstream ss;
  ss << "digraph lattice {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < lat.size(); ++i) {
    ss << "  n" << i << " [label=\"{";
    bool first = true;
    for (const auto& p : lat.nodes()[i].points.points()) {
      ss << (first ? "" : " ") << point_text(p);
      first = false;
    }
    ss << "}\"];\n";
  }
  for (const auto& [lo, hi] : lat.covers()) ss << "  n" << lo << " -> n" << hi << ";\n";
  ss << "}\n";
  return ss.str();
}

Json separation_json(const SeparationResult& r) {
  Json out;
  out["separated"] = r.separated();
  out["hom_count"] = r.hom_count;
  if (r.certificate) {
    out["exponent"] = r.certificate->exponent();
    Json homs = Json::array();
    for (const auto& h : r.certificate->homs) homs.push_back(h);
    out["homs"] = std::move(homs);
  } else {
    out["exponent"] = nullptr;
    out["homs"] = nullptr;
  }
  if (r.counterexample) {
    out["counterexample"] = Json::array({r.counterexample->first, r.counterexample->second});
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

Json verdict_json(const EquivalenceVerdict& v) {
  Json out;
  out["equivalent"] = v.equivalent;
  out["forward"] = separation_json(v.forward);
  out["backward"] = separation_json(v.backward);
  return out;
}

Json cross_validation_json(const CrossValidationReport& r, const Signature& sig) {
  Json out;
  out["agreement"] = r.agreement;
  if (r.distinction) {
    const auto& d = *r.distinction;
    Json dj;
    dj["system"] = system_json(d.system, sig);
    dj["pair"] = Json::array({print_term(d.w0, sig, d.system.vars()), print_term(d.w0p, sig, d.system.vars())});
    dj["in_first"] = d.in_first;
    dj["in_second"] = d.in_second;
    dj["vars"] = d.vars;
    dj["depth"] = d.depth;
    out["distinction"] = std::move(dj);
  } else {
    out["distinction"] = nullptr;
  }
  Json windows = Json::array();
  for (const auto& w : r.windows) {
    windows.push_back(Json{{"vars", w.vars},
                           {"depth", w.depth},
                           {"terms", w.terms},
                           {"equations", w.equations},
                           {"systems", w.systems},
                           {"checks", w.checks}});
  }
  out["windows"] = std::move(windows);
  return out;
}

Json palgebra_json(const StructureAlgebra& a) {
  Json out;
  out["name"] = a.name();
  out["field"] = a.field()->name();
  out["dim"] = a.dim();
  out["basis"] = a.basis();
  out["kind"] = a.lie() ? "lie" : (a.associative() ? "assoc" : "plain");
  out["commutative"] = a.commutative();
  if (a.unit()) out["unit"] = vector_json(*a.unit());
  else out["unit"] = nullptr;
  out["twist"] = a.twist_exponent();
  Json rows = Json::array();
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      StructureAlgebra::Vector v(d);
      for (std::size_t k = 0; k < d; ++k) v[k] = a.constant(i, j, k);
      rows.push_back(vector_json(v));
    }
  }
  out["constants"] = std::move(rows);
  out["file"] = print_palgebra(a);
  return out;
}

Json category_json(const CategoryGraph& g, const Signature& sig) {
  Json out;
  Json objects = Json::array();
  for (std::size_t i = 0; i < g.objects.size(); ++i) {
    const auto& o = g.objects[i];
    objects.push_back(Json{{"id", i}, {"vars", o.vars}, {"points", points_json(o.points)}});
  }
  out["objects"] = std::move(objects);
  Json morphisms = Json::array();
  for (const auto& m : g.morphisms) {
    const auto target_vars = default_vars(m.representative.target_vars());
    Json images = Json::array();
    for (const auto& t : m.representative.images()) images.push_back(print_term(t, sig, target_vars));
    Json map = Json::array();
    for (const auto& p : m.point_map) map.push_back(p);
    morphisms.push_back(Json{{"from", m.from},
                             {"to", m.to},
                             {"representative", std::move(images)},
                             {"point_map", std::move(map)},
                             {"substitutions", m.substitutions}});
  }
  out["morphisms"] = std::move(morphisms);
  return out;
}

Json lattice_iso_json(const LatticeIsomorphismReport& r, const SemiinnerData& phi, const Signature& sig,
                      std::size_t max_listed) {
  Json out;
  out["verified"] = r.verified();
  out["size1"] = r.size1;
  out["size2"] = r.size2;
  out["total"] = r.total;
  out["bijective"] = r.bijective;
  out["order_preserved"] = r.order_preserved;
  out["identity"] = r.identity;
  Json pairs = Json::array();
  const std::size_t listed = std::min(max_listed, r.mapping.size());
  for (std::size_t i = 0; i < listed; ++i) {
    const auto& g = r.generators[i];
    pairs.push_back(Json{{"from", i},
                         {"to", r.mapping[i]},
                         {"generators", equations_json(g.equations(), sig, g.vars())},
                         {"image_generators", equations_json(phi.apply(g).equations(), sig, g.vars())}});
  }
  out["bijection_truncated"] = listed < r.mapping.size();
  out["bijection"] = std::move(pairs);
  return out;
}

Json duality_json(const DualityReport& r) {
  Json out;
  out["set_closed"] = r.set_closed;
  out["double_closure"] = points_json(r.double_closure);
  out["window_equations"] = r.window_equations;
  out["window_roots_match"] = r.window_roots_match;
  out["congruence_windows_match"] = r.congruence_windows_match;
  out["quotient_size"] = r.quotient_size;
  out["fingerprint"] = r.fingerprint;
  out["fingerprint_stable"] = r.fingerprint_stable;
  return out;
}

}  // namespace uag::cli
