#include "commands.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "report.hpp"
#include "uag/error.hpp"
#include "uag/parser.hpp"
#include "uag/polynomial.hpp"

namespace uag::cli {

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

/// Runs a loader and prefixes parse errors with the file they come from.
template <class F>
auto with_origin(const std::string& origin, F&& load) -> decltype(load()) {
  try {
    return load();
  } catch (const ParseError& e) {
    std::ostringstream ss;
    ss << origin << ":" << e.line() << ":" << e.column() << ": " << e.detail();
    throw InputError(ss.str());
  }
}

/// Loads a table file, or compiles a structure algebra when the file ends in .palg.
FiniteAlgebra load_any(const std::string& path, const Caps& caps) {
  if (ends_with(path, ".palg")) {
    auto a = with_origin(path, [&] { return load_palgebra_file(path); });
    return compile(a, caps);
  }
  return with_origin(path, [&] { return load_algebra_file(path); });
}

StructureAlgebra load_structure(const std::string& path) {
  return with_origin(path, [&] { return load_palgebra_file(path); });
}

EquationSystem load_system(const std::string& path, const Signature& sig) {
  return with_origin(path, [&] { return load_system_file(path, sig); });
}

void emit(const Json& j, std::ostream& out) { out << j.dump(2) << '\n'; }

void no_dot(const Settings& s, const std::string& command) {
  if (s.format == Format::Dot) throw InputError(command + ": dot output is not available");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Json header(const std::string& command) {
  Json j;
  j["command"] = command;
  return j;
}

}  // namespace

int cmd_solve(const std::string& algebra, const std::string& system, const Settings& s, std::ostream& out) {
  no_dot(s, "solve");
  const auto h = load_any(algebra, s.caps);
  const auto t = load_system(system, h.signature());
  const auto sol = solution_set(t, h, s.caps);
  if (s.format == Format::Text) {
    for (const auto& p : sol.points.points()) out << point_text(p) << '\n';
    return kSuccess;
  }
  Json j = header("solve");
  j["algebra"] = h.name();
  j["system"] = system_json(t, h.signature());
  j["count"] = sol.points.size();
  j["points"] = points_json(sol.points);
  emit(j, out);
  return kSuccess;
}

int cmd_closure(const std::string& algebra, const std::string& system, const std::optional<std::string>& pair,
                const Settings& s, std::ostream& out) {
  no_dot(s, "closure");
  const auto h = load_any(algebra, s.caps);
  const auto t = load_system(system, h.signature());
  const auto& sig = h.signature();
  Json j = header("closure");
  j["algebra"] = h.name();
  j["system"] = system_json(t, sig);
  if (pair) {
    const auto e = with_origin("--pair", [&] { return parse_equation(*pair, sig, t.vars()); });
    const bool member = closure_membership(t, h, e.lhs, e.rhs, s.caps);
    if (s.format == Format::Text) {
      out << print_equation(e, sig, t.vars()) << (member ? " is" : " is not") << " in the closure\n";
    } else {
      j["pair"] = Json::array({print_term(e.lhs, sig, t.vars()), print_term(e.rhs, sig, t.vars())});
      j["member"] = member;
      emit(j, out);
    }
    return member ? kSuccess : kNegative;
  }
  const auto pairs = closure_on_universe(t, h, s.bound, s.caps);
  std::size_t nontrivial = 0;
  Json list = Json::array();
  for (const auto& [a, b] : pairs) {
    if (a == b) continue;
    ++nontrivial;
    list.push_back(Json::array({print_term(a, sig, t.vars()), print_term(b, sig, t.vars())}));
  }
  if (s.format == Format::Text) {
    for (const auto& p : list) out << p[0].get<std::string>() << " = " << p[1].get<std::string>() << '\n';
    return kSuccess;
  }
  j["depth"] = s.bound.max_depth;
  j["count"] = nontrivial;
  j["pairs"] = std::move(list);
  emit(j, out);
  return kSuccess;
}

int cmd_lattice(const std::string& algebra, std::size_t vars, const Settings& s, std::ostream& out) {
  const auto h = load_any(algebra, s.caps);
  const auto lat = lattice(default_vars(vars), h, s.caps);
  if (s.format == Format::Dot) {
    out << lattice_dot(lat);
  } else if (s.format == Format::Text) {
    for (std::size_t i = 0; i < lat.size(); ++i) {
      out << i << ":";
      for (const auto& p : lat.nodes()[i].points.points()) out << ' ' << point_text(p);
      out << '\n';
    }
    for (const auto& [lo, hi] : lat.covers()) out << lo << " < " << hi << '\n';
  } else {
    Json j = header("lattice");
    j["algebra"] = h.name();
    j.update(lattice_json(lat, h.signature()));
    emit(j, out);
  }
  return kSuccess;
}

int cmd_equiv(const std::string& first, const std::string& second, bool cross_validate, const Settings& s,
              std::ostream& out) {
  no_dot(s, "equiv");
  const auto h1 = load_any(first, s.caps);
  const auto h2 = load_any(second, s.caps);
  const auto v = geometrically_equivalent(h1, h2, s.caps);
  std::optional<CrossValidationReport> cv;
  if (cross_validate) cv = cross_validate_equivalence(h1, h2, s.bound, s.caps);
  if (s.format == Format::Text) {
    out << h1.name() << (v.equivalent ? " ~ " : " !~ ") << h2.name() << '\n';
    if (cv) {
      out << "window agreement: " << yes_no(cv->agreement) << '\n';
      if (cv->distinction) {
        const auto& d = *cv->distinction;
        out << "distinction: " << print_term(d.w0, h1.signature(), d.system.vars()) << " = "
            << print_term(d.w0p, h1.signature(), d.system.vars()) << " over\n"
            << print_system(d.system, h1.signature());
      }
    }
  } else {
    Json j = header("equiv");
    j["first"] = h1.name();
    j["second"] = h2.name();
    j.update(verdict_json(v));
    if (cv) {
      Json c = cross_validation_json(*cv, h1.signature());
      c["depth"] = s.bound.max_depth;
      c["vars"] = s.bound.max_vars;
      c["consistent_with_decision"] = cv->agreement == v.equivalent;
      j["cross_validation"] = std::move(c);
    }
    emit(j, out);
  }
  return v.equivalent ? kSuccess : kNegative;
}

int cmd_twist(const std::string& palgebra, const std::string& sigma, const Settings& s, std::ostream& out) {
  no_dot(s, "twist");
  const auto a = load_structure(palgebra);
  const auto sg = parse_automorphism(sigma, a.field());
  const auto t = twist(a, sg);
  if (s.format == Format::Text) {
    out << print_palgebra(t);
    return kSuccess;
  }
  Json j = header("twist");
  j["sigma"] = sg.name();
  j["structure"] = palgebra_json(t);
  emit(j, out);
  return kSuccess;
}

int cmd_opposite(const std::string& palgebra, const Settings& s, std::ostream& out) {
  no_dot(s, "opposite");
  const auto a = load_structure(palgebra);
  const auto op = opposite(a);
  if (s.format == Format::Text) {
    out << print_palgebra(op);
    return kSuccess;
  }
  Json j = header("opposite");
  j["structure"] = palgebra_json(op);
  emit(j, out);
  return kSuccess;
}

int cmd_mirror(const std::string& polynomial, const std::string& field, const Settings& s, std::ostream& out) {
  no_dot(s, "mirror");
  const auto f = FiniteField::parse(field);
  const auto p = with_origin("polynomial", [&] { return parse_polynomial(polynomial, f); });
  const auto m = mirror(p);
  if (s.format == Format::Text) {
    out << print_polynomial(m) << '\n';
    return kSuccess;
  }
  Json j = header("mirror");
  j["field"] = f->name();
  j["input"] = print_polynomial(p);
  j["mirror"] = print_polynomial(m);
  emit(j, out);
  return kSuccess;
}

int cmd_aequiv(const std::string& first, const std::string& second, const Settings& s, std::ostream& out) {
  no_dot(s, "aequiv");
  const auto a1 = load_structure(first);
  const auto a2 = load_structure(second);
  const auto tw = twisted_equivalent(a1, a2, s.caps);
  const auto almost = almost_equivalent(a1, a2, s.caps);
  if (s.format == Format::Text) {
    out << a1.name() << (almost ? " is" : " is not") << " almost equivalent to " << a2.name() << '\n';
    if (almost) {
      out << "sigma: " << almost->sigma.name() << ", opposite: " << yes_no(almost->opposite_used) << '\n';
    }
  } else {
    Json j = header("aequiv");
    j["first"] = a1.name();
    j["second"] = a2.name();
    j["almost_equivalent"] = almost.has_value();
    j["sigma"] = almost ? Json(almost->sigma.name()) : Json(nullptr);
    j["opposite_used"] = almost ? Json(almost->opposite_used) : Json(nullptr);
    j["twisted_equivalent"] = tw ? Json(tw->name()) : Json(nullptr);
    emit(j, out);
  }
  return almost ? kSuccess : kNegative;
}

int cmd_category_export(const std::string& algebra, std::size_t min_vars, std::size_t max_vars, std::size_t depth,
                        const Settings& s, std::ostream& out) {
  const auto h = load_any(algebra, s.caps);
  const auto g = export_category(min_vars, max_vars, h, depth, s.caps);
  if (s.format == Format::Dot) {
    out << category_dot(g, h);
  } else if (s.format == Format::Text) {
    out << g.objects.size() << " objects, " << g.morphisms.size() << " morphisms\n";
  } else {
    Json j = header("category export");
    j["algebra"] = h.name();
    j["min_vars"] = min_vars;
    j["max_vars"] = max_vars;
    j["depth"] = depth;
    j.update(category_json(g, h.signature()));
    emit(j, out);
  }
  return kSuccess;
}

int cmd_alpha_check(const std::string& palgebra, const std::string& sigma, const std::string& system,
                    std::size_t samples, std::size_t max_listed, const Settings& s, std::ostream& out) {
  no_dot(s, "alpha check");
  const auto a = load_structure(palgebra);
  const auto sg = parse_automorphism(sigma, a.field());
  const auto h1 = compile(a, s.caps);
  const auto h2 = compile(twist(a, sg), s.caps);
  const auto& sig = h1.signature();
  const auto t = load_system(system, sig);
  const SemiinnerData phi(sg, sig);

  const auto r = alpha(phi, t, h1, h2, s.bound, samples, s.seed, s.caps);
  const EndoPairWindow subs(sig, t.num_vars(), s.bound.max_depth, samples, s.seed);
  NaturalityReport nat_total;
  std::size_t substitutions = 0;
  for (const auto& [s1, s2] : subs.pairs()) {
    for (const auto* sub : {&s1, &s2}) {
      const auto nr = naturality_check(phi, *sub, t, h1, h2, s.bound, s.caps);
      ++substitutions;
      nat_total.pairs += nr.pairs;
      nat_total.mismatches += nr.mismatches;
      if (!nat_total.counterexample && nr.counterexample) nat_total.counterexample = nr.counterexample;
    }
  }
  const auto compat = compatibility_sample(phi, t, h1, h2, s.bound.max_depth, samples, s.seed, s.caps);
  const auto iso = lattice_isomorphism_check(phi, t.vars(), h1, h2, s.caps);
  const bool ok = r.verified() && nat_total.passed() && compat.failures == 0 && iso.verified();

  if (s.format == Format::Text) {
    out << "alpha: " << (r.verified() ? "verified" : "FAILED") << '\n'
        << "naturality: " << nat_total.mismatches << " mismatches over " << nat_total.pairs << " pairs\n"
        << "compatibility: " << compat.failures << " failures over " << compat.samples << " samples\n"
        << "lattice isomorphism: " << (iso.verified() ? "verified" : "FAILED") << '\n';
    return ok ? kSuccess : kNegative;
  }
  Json j = header("alpha check");
  j["algebra"] = a.name();
  j["sigma"] = sg.name();
  j["seed"] = s.seed;
  j["system"] = system_json(t, sig);
  j["verified"] = ok;
  j["alpha"] = Json{{"image_generators", system_json(r.image_generators, sig)},
                    {"window_pairs", r.window_pairs},
                    {"formula_mismatches", r.formula_mismatches},
                    {"sampled_checks", r.sampled_checks},
                    {"sampled_failures", r.sampled_failures},
                    {"verified", r.verified()}};
  Json nat{{"substitutions", substitutions}, {"pairs", nat_total.pairs}, {"mismatches", nat_total.mismatches}};
  if (nat_total.counterexample) {
    nat["counterexample"] = Json::array({print_term(nat_total.counterexample->first, sig, t.vars()),
                                         print_term(nat_total.counterexample->second, sig, t.vars())});
  } else {
    nat["counterexample"] = nullptr;
  }
  j["naturality"] = std::move(nat);
  j["compatibility"] = Json{{"samples", compat.samples}, {"related", compat.related}, {"failures", compat.failures}};
  j["lattice_isomorphism"] = lattice_iso_json(iso, phi, sig, max_listed);
  emit(j, out);
  return ok ? kSuccess : kNegative;
}

int cmd_duality_check(const std::string& algebra, const std::optional<std::string>& system,
                      const std::optional<std::string>& points, std::optional<std::size_t> vars, const Settings& s,
                      std::ostream& out) {
  no_dot(s, "duality check");
  const auto h = load_any(algebra, s.caps);
  if (system.has_value() == points.has_value()) {
    throw InputError("duality check: give exactly one of --system and --points");
  }
  PointSet a;
  Json source;
  if (system) {
    const auto t = load_system(*system, h.signature());
    a = solution_set(t, h, s.caps).points;
    source["system"] = system_json(t, h.signature());
  } else {
    Json parsed;
    try {
      parsed = Json::parse(*points);
    } catch (const Json::parse_error& e) {
      throw InputError("--points:1:" + std::to_string(e.byte) + ": expected a JSON array of tuples");
    }
    if (!parsed.is_array()) throw InputError("--points:1:1: expected a JSON array of tuples");
    std::vector<Point> pts;
    for (const auto& p : parsed) {
      if (!p.is_array()) throw InputError("--points: every point must be an array");
      Point q;
      for (const auto& c : p) {
        if (!c.is_number_unsigned() || c.get<std::size_t>() >= h.size()) {
          throw InputError("--points: coordinates must be elements of " + h.name());
        }
        q.push_back(c.get<Elem>());
      }
      pts.push_back(std::move(q));
    }
    std::size_t k = 0;
    if (vars) k = *vars;
    else if (!pts.empty()) k = pts.front().size();
    else throw InputError("--points: an empty set needs --vars");
    for (const auto& p : pts) {
      if (p.size() != k) throw InputError("--points: every point needs " + std::to_string(k) + " coordinates");
    }
    std::sort(pts.begin(), pts.end());
    a = PointSet::from_points(PointSpace{h.size(), k}, pts);
    source["points"] = points_json(a);
  }
  const auto r = duality_roundtrip(a, h, s.bound, s.caps);
  const bool ok = r.set_closed && r.window_roots_match && r.congruence_windows_match && r.fingerprint_stable;
  if (s.format == Format::Text) {
    out << "closed: " << yes_no(r.set_closed) << ", window roots: " << yes_no(r.window_roots_match)
        << ", congruence window: " << yes_no(r.congruence_windows_match)
        << ", fingerprint stable: " << yes_no(r.fingerprint_stable) << '\n';
    return ok ? kSuccess : kNegative;
  }
  Json j = header("duality check");
  j["algebra"] = h.name();
  j.update(source);
  j["verified"] = ok;
  j.update(duality_json(r));
  emit(j, out);
  return ok ? kSuccess : kNegative;
}

}  // namespace uag::cli
