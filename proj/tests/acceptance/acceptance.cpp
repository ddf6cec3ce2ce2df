// Desk-scale acceptance run. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "cli_runner.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "uag/category.hpp"
#include "uag/equivalence.hpp"
#include "uag/error.hpp"
#include "uag/geometry.hpp"
#include "uag/identities.hpp"
#include "uag/palgebra.hpp"
#include "uag/polynomial.hpp"

using namespace uag;

namespace {

// Tolerances. Every criterion is exact: no failure is allowed.
constexpr std::size_t kAllowedFailures = 0;

// Sample sizes.
constexpr std::size_t kMaxVars = 2;
constexpr std::size_t kMaxDepth = 2;
constexpr std::size_t kBasisSystems = 50;
constexpr std::size_t kMaxBasisEquations = 20;
constexpr std::size_t kLawInputs = 1000;
constexpr std::size_t kSubstitutionPairs = 200;
constexpr std::size_t kChainsPerWindow = 4;
constexpr std::size_t kMaxChain = 10;
constexpr std::size_t kRandomPointSets = 1000;
constexpr std::size_t kAllSubsetsUpTo = 9;  ///< enumerate every point set when |H|^|X| is at most this

struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures++ == 0) first_failure = what;
  }
  void note(std::string s) { notes.push_back(std::move(s)); }
};

struct Fixture {
  std::string name;
  FiniteAlgebra h;
};

std::vector<Fixture> fixture_set() {
  return {{"Z2", fixtures::z2()},
          {"Z3", fixtures::z3()},
          {"Z4", fixtures::z4()},
          {"Z2xZ2", fixtures::z2xz2()},
          {"SL2", fixtures::sl2()},
          {"F2[e]", compile(fixtures::palg("f2eps"))},
          {"F4", compile(fixtures::palg("f4"))}};
}

const std::vector<std::string> kStructureFixtures = {"f2", "f2eps", "f4", "f4eps", "lie4", "t2", "leftunit"};

EquationSystem system_of(const VarSet& vars, std::initializer_list<const Equation*> eqs) {
  EquationSystem s(vars);
  for (const auto* e : eqs) s.add(*e);
  return s;
}

PointSet as_points(const oracle::Window& w, std::uint64_t bits) {
  return PointSet(PointSpace{w.h->size(), w.k}, bits_mask(bits, w.n));
}

/// A window of item 1 with its systems of at most two equations, grouped by solution set.
struct SystemWindow {
  const Fixture* fx = nullptr;
  oracle::Window w;
  VarSet vars;
  std::vector<std::uint64_t> sol;        ///< distinct solution sets
  std::vector<EquationSystem> sol_rep;   ///< first system with each solution set
  std::size_t systems = 0;               ///< systems enumerated, before grouping

  std::string label() const { return fx->name + " |X|=" + std::to_string(w.k); }
};

std::vector<SystemWindow> build_windows(const std::vector<Fixture>& fxs) {
  std::vector<SystemWindow> out;
  for (const auto& fx : fxs) {
    for (std::size_t k = 1; k <= kMaxVars; ++k) {
      SystemWindow sw;
      sw.fx = &fx;
      sw.w = oracle::build_window(fx.h, k, kMaxDepth);
      sw.vars = default_vars(k);
      std::unordered_map<std::uint64_t, std::size_t> index;
      auto add = [&](std::uint64_t s, EquationSystem&& t) {
        ++sw.systems;
        if (index.emplace(s, sw.sol.size()).second) {
          sw.sol.push_back(s);
          sw.sol_rep.push_back(std::move(t));
        }
      };
      const auto& m = sw.w.masks;
      add(oracle::full_mask(sw.w.n), EquationSystem(sw.vars));
      for (std::size_t a = 0; a < m.size(); ++a) add(m[a], system_of(sw.vars, {&sw.w.mask_rep[a]}));
      for (std::size_t a = 0; a < m.size(); ++a) {
        for (std::size_t b = a + 1; b < m.size(); ++b) {
          const auto s = m[a] & m[b];
          if (index.count(s)) {
            ++sw.systems;
            continue;
          }
          add(s, system_of(sw.vars, {&sw.w.mask_rep[a], &sw.w.mask_rep[b]}));
        }
      }
      out.push_back(std::move(sw));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// 1. Galois laws

Tally galois_laws(const std::vector<SystemWindow>& windows) {
  Tally t;
  std::mt19937_64 rng(101);
  for (const auto& sw : windows) {
    const auto& w = sw.w;
    const auto& h = *w.h;
    const auto full = oracle::full_mask(w.n);
    const std::string at = sw.label();
    auto lib_sol = [&](const EquationSystem& s) { return oracle::bits_of(solution_set(s, h).points.mask()); };
    auto in_closure = [&](const EquationSystem& s) {
      bool ok = true;
      for (const auto& e : s.equations()) ok = ok && closure_membership(s, h, e.lhs, e.rhs);
      return ok;
    };

    t.check(lib_sol(EquationSystem(sw.vars)) == full, at + ": empty system");
    std::vector<std::uint64_t> single(w.masks.size());
    for (std::size_t a = 0; a < w.masks.size(); ++a) {
      const auto s = system_of(sw.vars, {&w.mask_rep[a]});
      single[a] = lib_sol(s);
      t.check(single[a] == w.masks[a], at + ": solution set of one equation");
      t.check(in_closure(s), at + ": T in T'' for one equation");
    }
    for (std::size_t a = 0; a < w.masks.size(); ++a) {
      for (std::size_t b = a + 1; b < w.masks.size(); ++b) {
        const auto s = system_of(sw.vars, {&w.mask_rep[a], &w.mask_rep[b]});
        const auto l = lib_sol(s);
        t.check(l == (w.masks[a] & w.masks[b]), at + ": solution set of two equations");
        t.check(oracle::subset(l, single[a]) && oracle::subset(l, single[b]), at + ": antitonicity");
        t.check(in_closure(s), at + ": T in T''");
      }
    }

    // Solution sets are closed: (T')'' = T'.
    for (std::size_t i = 0; i < sw.sol.size(); ++i) {
      const auto d = double_closure_points(as_points(w, sw.sol[i]), h).points;
      t.check(oracle::bits_of(d.mask()) == sw.sol[i], at + ": (T')'' = T'");
    }

    // Point sets: extensivity, idempotence, monotonicity, kernel antitonicity.
    std::vector<std::uint64_t> sets;
    if (w.n <= kAllSubsetsUpTo) {
      for (std::uint64_t a = 0; a <= full; ++a) sets.push_back(a);
    } else {
      sets.push_back(0);
      sets.push_back(full);
      for (std::size_t p = 0; p < w.n; ++p) sets.push_back(std::uint64_t{1} << p);
      for (std::size_t i = 0; i < kRandomPointSets; ++i) {
        std::uint64_t a = rng() & full;
        if (i % 2 == 1) a &= rng() & rng();
        sets.push_back(a);
      }
    }
    std::size_t window_exact = 0;
    for (const auto a : sets) {
      const auto pa = as_points(w, a);
      const auto d = oracle::bits_of(double_closure_points(pa, h).points.mask());
      t.check(oracle::subset(a, d), at + ": A in A''");
      t.check(oracle::bits_of(double_closure_points(as_points(w, d), h).points.mask()) == d, at + ": A'''' = A''");
      std::uint64_t window_closure = full;
      for (const auto m : w.masks) {
        if (oracle::subset(a, m)) window_closure &= m;
      }
      t.check(oracle::subset(d, window_closure), at + ": A'' inside the window closure");
      if (d == window_closure) ++window_exact;

      const std::uint64_t b = a | (std::uint64_t{1} << (rng() % w.n));
      const auto db = oracle::bits_of(double_closure_points(as_points(w, b), h).points.mask());
      t.check(oracle::subset(d, db), at + ": A1 in A2 implies A1'' in A2''");
      const auto ka = kernel_congruence(pa, h);
      const auto kb = kernel_congruence(as_points(w, b), h);
      for (std::size_t c = 0; c < w.masks.size(); ++c) {
        const auto& e = w.mask_rep[c];
        const bool in_a = ka.decide(e.lhs, e.rhs);
        t.check(in_a == oracle::subset(a, w.masks[c]), at + ": kernel of A");
        t.check(!kb.decide(e.lhs, e.rhs) || in_a, at + ": A1 in A2 implies A2' in A1'");
      }
    }
    std::ostringstream ss;
    ss << at << ": " << sw.systems << " systems, " << w.masks.size() << " equation classes, " << sets.size()
       << " point sets (" << window_exact << " with A'' equal to the depth-" << kMaxDepth << " window closure)";
    t.note(ss.str());
  }
  return t;
}

// ---------------------------------------------------------------------------
// 2. closure_membership vs quasiidentities vs the factoring route

Tally membership_oracles(const std::vector<SystemWindow>& windows) {
  Tally t;
  for (const auto& sw : windows) {
    const auto& w = sw.w;
    const auto& h = *w.h;
    const std::string at = sw.label();
    for (std::size_t i = 0; i < sw.sol.size(); ++i) {
      const auto& sys = sw.sol_rep[i];
      const auto a2 = oracle::bits_of(double_closure_points(solution_set(sys, h).points, h).points.mask());
      for (std::size_t c = 0; c < w.masks.size(); ++c) {
        const auto& e = w.mask_rep[c];
        const bool expected = oracle::subset(sw.sol[i], w.masks[c]);
        t.check(closure_membership(sys, h, e.lhs, e.rhs) == expected, at + ": closure_membership");
        t.check(check_quasiidentity(h, sys, e) == expected, at + ": quasiidentity");
        t.check(oracle::subset(a2, w.masks[c]) == expected, at + ": factoring route");
      }
    }
    t.note(at + ": " + std::to_string(sw.sol.size()) + " x " + std::to_string(w.masks.size()));
  }
  return t;
}

// ---------------------------------------------------------------------------
// 3. Decision vs exhaustive windows

bool is_pair(const Distinction& d, const Term& a, const Term& b) {
  return (d.w0 == a && d.w0p == b) || (d.w0 == b && d.w0p == a);
}

Tally decision_vs_windows(const std::vector<Fixture>& fxs) {
  Tally t;
  UniverseBound bound;
  bound.max_vars = kMaxVars;
  bound.max_depth = kMaxDepth;
  auto compare = [&](const std::string& name, const FiniteAlgebra& a, const FiniteAlgebra& b) {
    const auto v = geometrically_equivalent(a, b);
    const auto cv = cross_validate_equivalence(a, b, bound);
    t.check(v.equivalent == cv.agreement, name + ": decision vs window");
    return std::make_pair(v, cv);
  };
  std::size_t pairs = 0;
  for (const auto& f : fxs) {
    for (const auto& g : fxs) {
      if (!(f.h.signature() == g.h.signature())) continue;
      compare(f.name + "," + g.name, f.h, g.h);
      ++pairs;
    }
    const auto [v, cv] = compare(f.name + "," + f.name + "^2", f.h, product(f.h, f.h));
    t.check(v.equivalent, f.name + ": H ~ H x H");
    ++pairs;
  }

  const auto z2 = fixtures::z2();
  const auto z4 = fixtures::z4();
  const VarSet xy{"x", "y"};
  const auto sys = fixtures::sys(z2, xy, {"x+y = 0"});
  t.check(!geometrically_equivalent(z2, z4).equivalent, "Z2,Z4: not equivalent");
  const auto d = find_distinction_for_system(z2, z4, sys, bound);
  t.check(d.has_value() && is_pair(*d, Term::var(0), Term::var(1)) && d->in_first && !d->in_second,
          "Z2,Z4: {x+y=0} separates on (x,y)");
  t.check(closure_membership(sys, z2, Term::var(0), Term::var(1)) &&
              !closure_membership(sys, z4, Term::var(0), Term::var(1)),
          "Z2,Z4: membership of (x,y)");
  const auto cv = cross_validate_equivalence(z2, fixtures::z2xz2(), bound);
  t.check(geometrically_equivalent(z2, fixtures::z2xz2()).equivalent && cv.agreement && !cv.distinction,
          "Z2,Z2xZ2: equivalent with no distinction");
  t.note(std::to_string(pairs) + " fixture pairs");
  return t;
}

// ---------------------------------------------------------------------------
// 4. Finite bases

Term random_term(const std::vector<Term>& terms, std::mt19937_64& rng) { return terms[rng() % terms.size()]; }

Tally finite_bases(const std::vector<Fixture>& fxs) {
  Tally t;
  std::mt19937_64 rng(404);
  std::size_t total_in = 0, total_out = 0;
  for (std::size_t i = 0; i < kBasisSystems; ++i) {
    const auto& fx = fxs[i % fxs.size()];
    const std::size_t k = 1 + rng() % kMaxVars;
    const auto vars = default_vars(k);
    const auto terms = enumerate_terms(fx.h.signature(), k, kMaxDepth, 1'000'000);
    EquationSystem sys(vars);
    const std::size_t size = 1 + rng() % kMaxBasisEquations;
    while (sys.size() < size) sys.add(Equation{random_term(terms, rng), random_term(terms, rng)});
    const auto basis = finite_basis(sys, fx.h);
    const auto pts = oracle::points(fx.h.size(), k);
    auto oracle_sol = [&](const EquationSystem& s) {
      std::uint64_t m = oracle::full_mask(pts.size());
      for (const auto& e : s.equations()) {
        m &= oracle::agreement(oracle::values(e.lhs, fx.h, pts), oracle::values(e.rhs, fx.h, pts));
      }
      return m;
    };
    const std::string at = fx.name + " system " + std::to_string(i);
    t.check(solution_set(basis, fx.h).points == solution_set(sys, fx.h).points, at + ": same solution set");
    t.check(oracle_sol(basis) == oracle_sol(sys), at + ": same solution set (oracle)");
    bool sub = basis.size() <= sys.size();
    for (const auto& e : basis.equations()) sub = sub && sys.contains(e);
    t.check(sub, at + ": basis is a subsystem");
    total_in += sys.size();
    total_out += basis.size();
  }
  t.note(std::to_string(kBasisSystems) + " systems, " + std::to_string(total_in) + " equations reduced to " +
         std::to_string(total_out));
  return t;
}

// ---------------------------------------------------------------------------
// 5. Twist, opposite and mirror laws

using Vec = StructureAlgebra::Vector;

Vec random_vector(const FiniteField& f, std::size_t d, std::mt19937_64& rng) {
  Vec v(d);
  for (auto& c : v) c = static_cast<FiniteField::Elem>(rng() % f.order());
  return v;
}

/// Inverse of a square matrix over the field, or empty when singular.
std::vector<Vec> inverse(const FiniteField& f, std::vector<Vec> m) {
  const std::size_t d = m.size();
  std::vector<Vec> inv(d, Vec(d, 0));
  for (std::size_t i = 0; i < d; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (p < d && m[p][c] == 0) ++p;
    if (p == d) return {};
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    const auto s = f.inv(m[c][c]);
    for (std::size_t j = 0; j < d; ++j) {
      m[c][j] = f.mul(s, m[c][j]);
      inv[c][j] = f.mul(s, inv[c][j]);
    }
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const auto g = m[r][c];
      for (std::size_t j = 0; j < d; ++j) {
        m[r][j] = f.sub(m[r][j], f.mul(g, m[c][j]));
        inv[r][j] = f.sub(inv[r][j], f.mul(g, inv[c][j]));
      }
    }
  }
  return inv;
}

struct BaseAlgebra {
  std::string name;
  std::size_t dim;
  std::function<std::map<std::size_t, unsigned>(std::size_t, std::size_t)> product;  ///< e_i e_j as basis index -> coefficient
  std::optional<std::vector<unsigned>> unit;
};

std::vector<BaseAlgebra> base_algebras() {
  using M = std::map<std::size_t, unsigned>;
  return {
      {"M2", 4,
       [](std::size_t a, std::size_t b) {
         // e_{ij} with index 2i + j; e_ij e_kl = [j = k] e_il
         const auto i = a / 2, j = a % 2, k = b / 2, l = b % 2;
         return j == k ? M{{2 * i + l, 1}} : M{};
       },
       std::vector<unsigned>{1, 0, 0, 1}},
      {"T2", 3,
       [](std::size_t a, std::size_t b) {
         // E11, E12, E22
         static const std::size_t row[] = {0, 0, 1}, col[] = {0, 1, 1};
         if (col[a] != row[b]) return M{};
         const auto r = row[a], c = col[b];
         return M{{r == 0 ? (c == 0 ? 0u : 1u) : 2u, 1}};
       },
       std::vector<unsigned>{1, 0, 1}},
      {"F[e]", 2, [](std::size_t a, std::size_t b) { return a + b < 2 ? M{{a + b, 1}} : M{}; },
       std::vector<unsigned>{1, 0}},
      {"F[x]/x^3", 3, [](std::size_t a, std::size_t b) { return a + b < 3 ? M{{a + b, 1}} : M{}; },
       std::vector<unsigned>{1, 0, 0}},
      {"FxF", 2, [](std::size_t a, std::size_t b) { return a == b ? M{{a, 1}} : M{}; }, std::vector<unsigned>{1, 1}},
      {"left unit", 2, [](std::size_t a, std::size_t b) { return a == 0 ? M{{b, 1}} : M{}; }, std::nullopt},
  };
}

/// A base algebra written in a random basis f_i = sum_a P[i][a] e_a.
StructureAlgebra random_associative(const FieldPtr& f, std::mt19937_64& rng) {
  static const auto bases = base_algebras();
  const auto& base = bases[rng() % bases.size()];
  const std::size_t d = base.dim;
  std::vector<Vec> p, q;
  do {
    p.assign(d, Vec());
    for (auto& row : p) row = random_vector(*f, d, rng);
    q = inverse(*f, p);
  } while (q.empty());
  std::vector<FiniteField::Elem> c(d * d * d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
          const auto pij = f->mul(p[i][a], p[j][b]);
          if (pij == 0) continue;
          for (const auto& [e, coeff] : base.product(a, b)) {
            const auto w = f->mul(pij, static_cast<FiniteField::Elem>(coeff % f->characteristic()));
            for (std::size_t k = 0; k < d; ++k) {
              auto& slot = c[(i * d + j) * d + k];
              slot = f->add(slot, f->mul(w, q[e][k]));
            }
          }
        }
      }
    }
  }
  std::optional<Vec> unit;
  if (base.unit) {
    Vec u(d, 0);
    for (std::size_t e = 0; e < d; ++e) {
      const auto ue = static_cast<FiniteField::Elem>((*base.unit)[e]);
      for (std::size_t k = 0; k < d; ++k) u[k] = f->add(u[k], f->mul(ue, q[e][k]));
    }
    unit = u;
  }
  return StructureAlgebra(base.name, f, d, c, StructureAlgebra::Kind::Associative, false, unit);
}

StructureAlgebra random_plain(const FieldPtr& f, std::mt19937_64& rng) {
  const std::size_t d = 1 + rng() % 3;
  std::vector<FiniteField::Elem> c(d * d * d);
  for (auto& x : c) x = static_cast<FiniteField::Elem>(rng() % f->order());
  return StructureAlgebra("random", f, d, c, StructureAlgebra::Kind::Plain, false, std::nullopt,
                          static_cast<unsigned>(rng() % f->degree()));
}

Polynomial random_polynomial(const FieldPtr& f, std::mt19937_64& rng) {
  Polynomial p(f);
  const std::size_t n = rng() % 5;
  for (std::size_t i = 0; i < n; ++i) {
    AssocWord w;
    const std::size_t len = rng() % 4;
    for (std::size_t j = 0; j < len; ++j) w.letters.push_back(1 + rng() % 3);
    p.add_term(static_cast<FiniteField::Elem>(1 + rng() % (f->order() - 1)), w);
  }
  return p;
}

Tally algebra_laws() {
  Tally t;
  const std::vector<FieldPtr> twist_fields = {FiniteField::make(2, 2), FiniteField::make(2, 3), FiniteField::make(3, 2),
                                              FiniteField::make(5, 1)};
  const std::vector<FieldPtr> fields = {FiniteField::make(2, 1), FiniteField::make(3, 1), FiniteField::make(2, 2),
                                        FiniteField::make(5, 1), FiniteField::make(3, 2)};
  std::mt19937_64 rng(505);

  for (std::size_t i = 0; i < kLawInputs; ++i) {
    const auto& f = twist_fields[i % twist_fields.size()];
    const auto a = random_plain(f, rng);
    const auto group = automorphism_group(f);
    const auto& s = group[rng() % group.size()];
    const auto& r = group[rng() % group.size()];
    const std::string at = "twist input " + std::to_string(i);
    t.check(twist(a, FieldAutomorphism::identity(f)).same_structure(a), at + ": identity acts trivially");
    t.check(twist(twist(a, s), r).same_structure(twist(a, r.compose(s))), at + ": action of a product");
    t.check(twist(twist(a, s), s.inverse()).same_structure(a), at + ": inverse undoes");
    const auto ts = twist(a, s);
    const auto x = random_vector(*f, a.dim(), rng);
    const auto y = random_vector(*f, a.dim(), rng);
    const auto lambda = static_cast<FiniteField::Elem>(rng() % f->order());
    t.check(ts.multiply(x, y) == a.multiply(x, y) && ts.add(x, y) == a.add(x, y), at + ": ring part kept");
    t.check(ts.scale(lambda, x) == a.scale(s.inverse()(lambda), x), at + ": scalars act through sigma^-1");
  }

  for (std::size_t i = 0; i < kLawInputs; ++i) {
    const auto& f = fields[i % fields.size()];
    const auto a = random_associative(f, rng);
    const auto op = opposite(a);
    const std::string at = "opposite input " + std::to_string(i) + " (" + a.name() + ")";
    t.check(opposite(op).same_structure(a), at + ": (H*)* = H");
    const auto x = random_vector(*f, a.dim(), rng);
    const auto y = random_vector(*f, a.dim(), rng);
    t.check(op.multiply(x, y) == a.multiply(y, x), at + ": reversed product");
    t.check(op.unit() == a.unit(), at + ": same unit");
  }

  for (std::size_t i = 0; i < kLawInputs; ++i) {
    const auto& f = fields[i % fields.size()];
    const auto p = random_polynomial(f, rng);
    const auto q = random_polynomial(f, rng);
    const std::string at = "mirror input " + std::to_string(i);
    t.check(mirror(mirror(p)) == p, at + ": involution");
    t.check(mirror(p * q) == mirror(q) * mirror(p), at + ": anti-multiplicative");
    t.check(mirror(p + q) == mirror(p) + mirror(q), at + ": additive");
    t.check(parse_polynomial(print_polynomial(p), f) == p, at + ": print/parse round trip");
  }
  t.note(std::to_string(kLawInputs) + " inputs per law family");
  return t;
}

// ---------------------------------------------------------------------------
// 6. Lattice isomorphisms for twisted algebras

Tally twisted_lattices() {
  Tally t;
  std::size_t checked = 0;
  std::vector<std::string> skipped;
  for (const auto& name : kStructureFixtures) {
    const auto a = fixtures::palg(name);
    const auto h = compile(a);
    for (const auto& s : automorphism_group(a.field())) {
      const auto tw = twist(a, s);
      const auto h2 = compile(tw);
      const SemiinnerData phi(s, h.signature());
      const std::string at = name + " " + s.name();
      for (std::size_t k = 1; k <= kMaxVars; ++k) {
        try {
          const auto r = lattice_isomorphism_check(phi, default_vars(k), h, h2);
          t.check(r.verified(), at + " |X|=" + std::to_string(k) + ": lattice isomorphism");
          ++checked;
        } catch (const CapExceeded& e) {
          skipped.push_back(at + " |X|=" + std::to_string(k));
        }
      }
      const auto back = twisted_equivalent(a, tw);
      t.check(back.has_value(), at + ": twisted_equivalent finds a witness");
    }
  }
  std::string note = std::to_string(checked) + " lattice pairs verified";
  if (!skipped.empty()) {
    note += "; beyond the lattice cap:";
    for (const auto& s : skipped) note += " [" + s + "]";
  }
  t.note(note);
  return t;
}

// ---------------------------------------------------------------------------
// 7. Naturality and compatibility on sampled substitutions

Tally naturality_compatibility() {
  Tally t;
  UniverseBound bound;
  bound.max_depth = kMaxDepth;
  std::mt19937_64 rng(707);
  std::size_t pairs = 0, related = 0;
  for (const auto& name : kStructureFixtures) {
    const auto a = fixtures::palg(name);
    const auto h1 = compile(a);
    const auto& sig = h1.signature();
    const std::size_t k = 2;
    const auto vars = default_vars(k);
    const auto terms = enumerate_terms(sig, k, 1, 1'000'000);
    for (const auto& s : automorphism_group(a.field())) {
      const auto h2 = compile(twist(a, s));
      const SemiinnerData phi(s, sig);
      EquationSystem gens(vars);
      gens.add(Equation{random_term(terms, rng), random_term(terms, rng)});
      const std::string at = name + " " + s.name();
      const std::uint64_t seed = rng();
      const EndoPairWindow window(sig, k, kMaxDepth, kSubstitutionPairs, seed);
      for (const auto& [s1, s2] : window.pairs()) {
        t.check(naturality_check(phi, s1, gens, h1, h2, bound).passed(), at + ": naturality");
        t.check(compatibility_check(phi, s1, s2, gens, h1, h2), at + ": compatibility");
        ++pairs;
      }
      const auto cs = compatibility_sample(phi, gens, h1, h2, kMaxDepth, kSubstitutionPairs, seed);
      t.check(cs.samples >= kSubstitutionPairs && cs.failures == 0, at + ": compatibility sample");
      t.check(cs.related > 0, at + ": sample has related pairs");
      related += cs.related;
      pairs += cs.samples;
    }
  }
  t.note(std::to_string(pairs) + " substitution pairs, " + std::to_string(related) + " related");
  return t;
}

// ---------------------------------------------------------------------------
// 8. tau(rho(T)) = T on the windows of item 1

Tally tau_rho(const std::vector<SystemWindow>& windows) {
  Tally t;
  std::size_t pairs = 0;
  for (const auto& sw : windows) {
    const auto& w = sw.w;
    const std::string at = sw.label();
    for (std::size_t i = 0; i < sw.sol.size(); ++i) {
      const auto cong = CongruenceOracle::closure_of_system(sw.sol_rep[i], *w.h);
      for (std::size_t c = 0; c < w.masks.size(); ++c) {
        const auto& e = w.mask_rep[c];
        const bool direct = cong.decide(e.lhs, e.rhs);
        t.check(direct == oracle::subset(sw.sol[i], w.masks[c]), at + ": T decides the pair");
        t.check(tau_of_rho_membership(cong, e.lhs, e.rhs) == direct, at + ": tau rho T = T");
        ++pairs;
      }
    }
  }
  t.note(std::to_string(pairs) + " (system, pair) classes");
  return t;
}

// ---------------------------------------------------------------------------
// 9. Directed unions

Tally directed_unions(const std::vector<Fixture>& fxs) {
  Tally t;
  UniverseBound bound;
  bound.max_depth = kMaxDepth;
  std::mt19937_64 rng(909);
  std::size_t chains = 0;
  for (const auto& fx : fxs) {
    for (std::size_t k = 1; k <= kMaxVars; ++k) {
      const auto vars = default_vars(k);
      const auto terms = enumerate_terms(fx.h.signature(), k, kMaxDepth, 1'000'000);
      const auto pts = oracle::points(fx.h.size(), k);
      for (std::size_t c = 0; c < kChainsPerWindow; ++c) {
        const std::size_t len = 1 + rng() % kMaxChain;
        std::vector<EquationSystem> chain;
        EquationSystem cur(vars);
        std::vector<std::size_t> sizes;
        std::uint64_t m = oracle::full_mask(pts.size());
        for (std::size_t i = 0; i < len; ++i) {
          const Equation e{random_term(terms, rng), random_term(terms, rng)};
          cur.add(e);
          m &= oracle::agreement(oracle::values(e.lhs, fx.h, pts), oracle::values(e.rhs, fx.h, pts));
          sizes.push_back(static_cast<std::size_t>(__builtin_popcountll(m)));
          chain.push_back(cur);
        }
        const auto r = directed_union_demo(chain, fx.h, bound);
        const std::string at = fx.name + " |X|=" + std::to_string(k) + " chain " + std::to_string(c);
        t.check(r.solution_sizes == sizes, at + ": solution sizes");
        t.check(r.strict_steps <= r.point_count, at + ": at most |H|^|X| strict steps");
        t.check(r.stabilization_index >= 1 && r.stabilization_index <= len, at + ": stabilization index");
        t.check(r.union_closed, at + ": union of closures is closed");
        t.check(r.stable_matches, at + ": stable member matches the union");
        ++chains;
      }
    }
  }
  t.note(std::to_string(chains) + " chains");
  return t;
}

// ---------------------------------------------------------------------------
// 10. CLI determinism

Tally cli_determinism() {
  Tally t;
  const auto corpus = cli_runner::load_corpus(UAG_CLI_CORPUS, UAG_TEST_DATA);
  std::vector<cli_runner::Run> first;
  for (const auto& c : corpus) first.push_back(cli_runner::run(UAG_CLI, c.args));
  std::size_t bytes = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto again = cli_runner::run(UAG_CLI, corpus[i].args);
    const std::string at = "corpus line " + std::to_string(corpus[i].line);
    t.check(again.out == first[i].out && again.code == first[i].code, at + ": byte-identical rerun");
    t.check(first[i].code == corpus[i].expected, at + ": exit code");
    bytes += first[i].out.size();
  }
  t.note(std::to_string(corpus.size()) + " commands, " + std::to_string(bytes) + " bytes per run");
  return t;
}

}  // namespace

int main() {
  const auto fxs = fixture_set();
  const auto windows = build_windows(fxs);

  struct Criterion {
    int id;
    const char* name;
    std::function<Tally()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "galois-laws", [&] { return galois_laws(windows); }},
      {2, "membership-oracles", [&] { return membership_oracles(windows); }},
      {3, "decision-vs-windows", [&] { return decision_vs_windows(fxs); }},
      {4, "finite-basis", [&] { return finite_bases(fxs); }},
      {5, "twist-opposite-mirror", [&] { return algebra_laws(); }},
      {6, "twisted-lattices", [&] { return twisted_lattices(); }},
      {7, "naturality-compatibility", [&] { return naturality_compatibility(); }},
      {8, "tau-rho-roundtrip", [&] { return tau_rho(windows); }},
      {9, "directed-unions", [&] { return directed_unions(fxs); }},
      {10, "cli-determinism", [&] { return cli_determinism(); }},
  };

  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    std::string error;
    try {
      t = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = error.empty() && t.checks > 0 && t.failures <= kAllowedFailures;
    all = all && pass;
    std::printf("%s %2d %-26s checks=%zu failures=%zu time=%.1fs\n", pass ? "PASS" : "FAIL", c.id, c.name, t.checks,
                t.failures, secs);
    for (const auto& n : t.notes) std::printf("        %s\n", n.c_str());
    if (!error.empty()) std::printf("        error: %s\n", error.c_str());
    if (t.failures > 0) std::printf("        first failure: %s\n", t.first_failure.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
