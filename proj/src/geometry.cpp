#include "uag/geometry.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "uag/error.hpp"

namespace uag {

std::uint64_t mask_bits(const Mask& m) {
  if (m.size() > 64) throw std::invalid_argument("mask wider than 64 bits");
  std::uint64_t b = 0;
  for (auto i = m.find_first(); i != Mask::npos; i = m.find_next(i)) b |= std::uint64_t{1} << i;
  return b;
}

Mask bits_mask(std::uint64_t bits, std::size_t size) {
  Mask m(size);
  for (std::size_t i = 0; i < size; ++i) {
    if (bits >> i & 1) m.set(i);
  }
  return m;
}

Mask agreement_mask(const Equation& e, const FiniteAlgebra& h, std::size_t num_vars, const Caps& caps) {
  const std::size_t n = PointSpace{h.size(), num_vars}.count(caps.assignments);
  Mask m(n);
  if (e.trivial()) {
    m.set();
    return m;
  }
  auto l = term_values(e.lhs, h, num_vars);
  auto r = term_values(e.rhs, h, num_vars);
  for (std::size_t p = 0; p < n; ++p) {
    if (l[p] == r[p]) m.set(p);
  }
  return m;
}

AlgebraicSet solution_set(const EquationSystem& t, const FiniteAlgebra& h, const Caps& caps) {
  PointSpace space{h.size(), t.num_vars()};
  space.count(caps.assignments);
  Mask m(space.count());
  m.set();
  for (const auto& e : t.equations()) {
    m &= agreement_mask(e, h, t.num_vars(), caps);
    if (m.none()) break;
  }
  return AlgebraicSet{PointSet(space, std::move(m)), AlgebraicSet::Provenance::SolutionOf, t};
}

CongruenceOracle kernel_congruence(const PointSet& a, const FiniteAlgebra& h) {
  return CongruenceOracle::kernel_of_set(a, h);
}

bool closure_membership(const EquationSystem& t, const FiniteAlgebra& h, const Term& w0, const Term& w0p,
                        const Caps& caps) {
  if (w0.var_bound() > t.num_vars() || w0p.var_bound() > t.num_vars()) {
    throw MismatchError("pair uses a variable outside the system's variable set");
  }
  const Mask sol = solution_set(t, h, caps).points.mask();
  const Mask agree = agreement_mask(Equation{w0, w0p}, h, t.num_vars(), caps);
  return sol.is_subset_of(agree);
}

AlgebraicSet double_closure_points(const PointSet& a, const FiniteAlgebra& h, const Caps& caps) {
  if (a.space().carrier != h.size()) throw MismatchError("point set over a different algebra");
  const PointSpace& space = a.space();
  const std::size_t n = space.count(caps.assignments);
  const std::vector<Point> pts = a.points();
  Mask out(n);
  for (std::size_t p = 0; p < n; ++p) {
    if (factoring_test(h, pts, space.point(p), caps).member) out.set(p);
  }
  return AlgebraicSet{PointSet(space, std::move(out)), AlgebraicSet::Provenance::ClosureOf, std::nullopt};
}

bool is_algebraic(const PointSet& a, const FiniteAlgebra& h, const Caps& caps) {
  return double_closure_points(a, h, caps).points == a;
}

std::optional<std::size_t> AlgebraicSetLattice::find(const Mask& m) const {
  const std::uint64_t b = mask_bits(m);
  auto it = std::lower_bound(lookup_.begin(), lookup_.end(), std::make_pair(b, std::size_t{0}));
  if (it == lookup_.end() || it->first != b) return std::nullopt;
  return it->second;
}

std::size_t AlgebraicSetLattice::meet(std::size_t i, std::size_t j) const {
  auto r = find(nodes_[i].points.mask() & nodes_[j].points.mask());
  if (!r) throw std::logic_error("lattice is not closed under intersection");
  return *r;
}

std::size_t AlgebraicSetLattice::closure_of(const Mask& m) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (m.is_subset_of(nodes_[i].points.mask())) return i;
  }
  throw std::logic_error("no closed superset");
}

std::size_t AlgebraicSetLattice::join(std::size_t i, std::size_t j) const {
  return closure_of(nodes_[i].points.mask() | nodes_[j].points.mask());
}

bool AlgebraicSetLattice::leq(std::size_t i, std::size_t j) const {
  return nodes_[i].points.mask().is_subset_of(nodes_[j].points.mask());
}

AlgebraicSetLattice lattice(const VarSet& vars, const FiniteAlgebra& h, const Caps& caps) {
  constexpr std::size_t kHardLimit = 24;
  PointSpace space{h.size(), vars.size()};
  const std::size_t n = space.count(caps.assignments);
  const std::size_t cap = std::min(caps.lattice_points, kHardLimit);
  if (n > cap) throw CapExceeded("lattice subset scan |H|^|X|", n, cap);

  ClosureEngine engine(h, vars.size(), caps);
  using Bits = std::uint32_t;
  const Bits full = n == 32 ? ~Bits{0} : ((Bits{1} << n) - 1);
  std::vector<Bits> cl(std::size_t{1} << n, 0);
  std::unordered_map<Bits, std::vector<std::size_t>> defs;

  AlgebraicSetLattice L;
  L.space_ = space;
  L.vars_ = vars;
  cl[full] = full;
  defs[full] = {};

  auto to_mask = [&](Bits b) { return bits_mask(b, n); };
  for (std::int64_t ai = static_cast<std::int64_t>(full) - 1; ai >= 0; --ai) {
    const Bits a = static_cast<Bits>(ai);
    Bits j = full;
    for (std::size_t mu = 0; mu < n; ++mu) {
      if (!(a >> mu & 1)) j &= cl[a | (Bits{1} << mu)];
    }
    if (j == a) {
      cl[a] = a;
      // A is the intersection of its closed strict supersets: combine their systems.
      std::vector<std::size_t> d;
      Bits cur = full;
      for (std::size_t mu = 0; mu < n && cur != a; ++mu) {
        if (a >> mu & 1) continue;
        const Bits b = cl[a | (Bits{1} << mu)];
        if ((cur & b) == cur) continue;
        cur &= b;
        const auto& db = defs.at(b);
        d.insert(d.end(), db.begin(), db.end());
      }
      std::sort(d.begin(), d.end());
      d.erase(std::unique(d.begin(), d.end()), d.end());
      defs[a] = std::move(d);
      continue;
    }
    const Bits k = static_cast<Bits>(mask_bits(engine.closure(to_mask(a))));
    if (k == j) {
      cl[a] = j;
      continue;
    }
    if (k != a) throw std::logic_error("closure engine disagrees with the lattice scan");
    // Meet-irreducible: one new equation cuts a out of its unique cover j.
    cl[a] = a;
    std::size_t mu = 0;
    while (!((j & ~a) >> mu & 1)) ++mu;
    auto e = engine.separating_equation(to_mask(a), mu);
    if (!e) throw std::logic_error("closed set without separating equation");
    Mask em = agreement_mask(*e, h, vars.size(), caps);
    const Bits eb = static_cast<Bits>(mask_bits(em));
    if ((j & eb) != a) throw std::logic_error("separating equation does not cut out the set");
    std::vector<std::size_t> d = defs.at(j);
    d.push_back(L.pool_.size());
    L.pool_.push_back(*e);
    L.pool_masks_.push_back(std::move(em));
    std::sort(d.begin(), d.end());
    defs[a] = std::move(d);
  }

  std::vector<Bits> closed;
  closed.reserve(defs.size());
  for (const auto& [m, d] : defs) closed.push_back(m);
  auto point_list = [&](Bits b) {
    std::vector<std::size_t> v;
    for (std::size_t i = 0; i < n; ++i) {
      if (b >> i & 1) v.push_back(i);
    }
    return v;
  };
  std::sort(closed.begin(), closed.end(), [&](Bits x, Bits y) {
    const int cx = __builtin_popcount(x), cy = __builtin_popcount(y);
    if (cx != cy) return cx < cy;
    return point_list(x) < point_list(y);
  });
  std::unordered_map<Bits, std::size_t> id;
  for (std::size_t i = 0; i < closed.size(); ++i) {
    id[closed[i]] = i;
    const auto& d = defs.at(closed[i]);
    EquationSystem sys(vars);
    for (auto e : d) sys.add(L.pool_[e]);
    L.nodes_.push_back(
        AlgebraicSet{PointSet(space, to_mask(closed[i])), AlgebraicSet::Provenance::SolutionOf, std::move(sys)});
    L.defining_.push_back(d);
    L.lookup_.emplace_back(closed[i], i);
  }
  std::sort(L.lookup_.begin(), L.lookup_.end());
  for (std::size_t i = 0; i < closed.size(); ++i) {
    const Bits a = closed[i];
    std::vector<Bits> ups;
    for (std::size_t mu = 0; mu < n; ++mu) {
      if (!(a >> mu & 1)) ups.push_back(cl[a | (Bits{1} << mu)]);
    }
    std::sort(ups.begin(), ups.end());
    ups.erase(std::unique(ups.begin(), ups.end()), ups.end());
    for (Bits u : ups) {
      bool minimal = true;
      for (Bits v : ups) {
        if (v != u && (v & u) == v) {
          minimal = false;
          break;
        }
      }
      if (minimal) L.covers_.emplace_back(i, id.at(u));
    }
  }
  std::sort(L.covers_.begin(), L.covers_.end());
  return L;
}

std::vector<std::pair<Term, Term>> closure_on_universe(const EquationSystem& t, const FiniteAlgebra& h,
                                                       const UniverseBound& bound, const Caps& caps) {
  const std::size_t k = t.num_vars();
  auto terms = enumerate_terms(h.signature(), k, bound.max_depth, bound.max_terms);
  const std::size_t pairs = terms.size() * (terms.size() + 1) / 2;
  if (pairs > bound.max_pairs) throw CapExceeded("closure window pairs", pairs, bound.max_pairs);
  const Mask sol = solution_set(t, h, caps).points.mask();
  std::vector<std::size_t> pts;
  for (auto i = sol.find_first(); i != Mask::npos; i = sol.find_next(i)) pts.push_back(i);
  std::vector<std::vector<Elem>> vals;
  vals.reserve(terms.size());
  for (const auto& w : terms) {
    auto all = term_values(w, h, k);
    std::vector<Elem> on(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) on[i] = all[pts[i]];
    vals.push_back(std::move(on));
  }
  std::vector<std::pair<Term, Term>> out;
  for (std::size_t j = 0; j < terms.size(); ++j) {
    for (std::size_t i = 0; i <= j; ++i) {
      if (vals[i] == vals[j]) out.emplace_back(terms[j], terms[i]);
    }
  }
  return out;
}

}  // namespace uag
