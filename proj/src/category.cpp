#include "uag/category.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "tuples.hpp"
#include "uag/error.hpp"
#include "uag/subpower.hpp"
#include "uag/window.hpp"

namespace uag {

namespace {

std::size_t below(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

/// Groups words by their values on a point set, so that T-equivalent
/// partners can be drawn directly when T is given by its roots.
class WordClasses {
 public:
  WordClasses(const std::vector<Term>& words, const PointSet& points, const FiniteAlgebra& h) {
    const auto pts = points.points();
    class_of_.resize(words.size());
    std::map<std::vector<Elem>, std::size_t> ids;
    for (std::size_t w = 0; w < words.size(); ++w) {
      std::vector<Elem> key;
      key.reserve(pts.size());
      for (const auto& p : pts) key.push_back(eval_term(words[w], p, h));
      auto [it, fresh] = ids.emplace(std::move(key), members_.size());
      if (fresh) members_.emplace_back();
      members_[it->second].push_back(w);
      class_of_[w] = it->second;
    }
  }
  /// A random word in the class of word w.
  std::size_t partner(std::size_t w, std::mt19937_64& rng) const {
    const auto& m = members_[class_of_[w]];
    return m[below(rng, m.size())];
  }

 private:
  std::vector<std::size_t> class_of_;
  std::vector<std::vector<std::size_t>> members_;
};

/// A random T-equivalent word for each image of nu, found by scanning the
/// words from a random offset (at most `budget` decisions per variable).
Substitution related_partner(const CongruenceOracle& t, const Substitution& nu, const std::vector<Term>& words,
                             std::mt19937_64& rng, std::size_t budget = 200) {
  std::vector<Term> images;
  for (std::size_t x = 0; x < nu.source_vars(); ++x) {
    Term pick = nu.image(x);
    const std::size_t start = below(rng, words.size());
    for (std::size_t step = 0; step < std::min(budget, words.size()); ++step) {
      const Term& cand = words[(start + step) % words.size()];
      if (t.decide(nu.image(x), cand)) {
        pick = cand;
        break;
      }
    }
    images.push_back(pick);
  }
  return Substitution(nu.target_vars(), std::move(images));
}

Substitution random_substitution(std::size_t source, std::size_t target, const std::vector<Term>& words,
                                 std::mt19937_64& rng) {
  std::vector<Term> images;
  for (std::size_t y = 0; y < source; ++y) images.push_back(words[below(rng, words.size())]);
  return Substitution(target, std::move(images));
}

/// Words of depth <= 1 from a universe list (which is ordered by depth).
std::vector<Term> shallow_words(const std::vector<Term>& words) {
  std::vector<Term> out;
  for (const auto& w : words) {
    if (w.depth() <= 1) out.push_back(w);
  }
  return out;
}

bool identifies_images(const CongruenceOracle& t, const Substitution& s1, const Substitution& s2) {
  for (std::size_t y = 0; y < s1.source_vars(); ++y) {
    if (!t.decide(s1.image(y), s2.image(y))) return false;
  }
  return true;
}

void require_endomorphism(const Substitution& s, std::size_t vars) {
  if (s.source_vars() != vars || s.target_vars() != vars) {
    throw MismatchError("expected an endomorphism of W(X) with |X| = " + std::to_string(vars));
  }
}

std::uint64_t fnv(std::uint64_t h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xff;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

Substitution::Substitution(std::size_t target_vars, std::vector<Term> images)
    : target_vars_(target_vars), images_(std::move(images)) {
  for (const auto& t : images_) {
    if (t.var_bound() > target_vars_) throw MismatchError("substitution image uses a variable outside the target");
  }
}

Substitution Substitution::identity(std::size_t vars) {
  std::vector<Term> images;
  for (std::size_t i = 0; i < vars; ++i) images.push_back(Term::var(i));
  return Substitution(vars, std::move(images));
}

Term Substitution::apply(const Term& w) const {
  if (w.var_bound() > images_.size()) throw MismatchError("term uses a variable outside the substitution's source");
  return replace_vars(w, [&](std::size_t i) { return images_[i]; });
}

Substitution compose(const Substitution& outer, const Substitution& inner) {
  if (inner.target_vars() != outer.source_vars()) throw MismatchError("substitutions do not compose");
  std::vector<Term> images;
  for (const auto& t : inner.images()) images.push_back(outer.apply(t));
  return Substitution(outer.target_vars(), std::move(images));
}

Point induced_point_map(const Substitution& s, const Point& nu, const FiniteAlgebra& h) {
  if (nu.size() != s.target_vars()) throw MismatchError("point does not match the substitution's target");
  Point out;
  for (const auto& t : s.images()) out.push_back(eval_term(t, nu, h));
  return out;
}

bool check_morphism(const Substitution& s, const PointSet& a, const PointSet& b, const FiniteAlgebra& h) {
  if (a.space() != PointSpace{h.size(), s.target_vars()} || b.space() != PointSpace{h.size(), s.source_vars()}) {
    throw MismatchError("point sets do not match the substitution");
  }
  for (const auto& nu : a.points()) {
    if (!b.contains(induced_point_map(s, nu, h))) return false;
  }
  return true;
}

CongruenceOracle cl_preimage(const Substitution& s, const CongruenceOracle& t) {
  if (t.num_vars() != s.target_vars()) throw MismatchError("congruence does not live on the substitution's target");
  return CongruenceOracle::preimage([s](const Term& w) { return s.apply(w); }, s.source_vars(), t,
                                    "preimage of " + t.describe());
}

bool rho(const CongruenceOracle& t, const Substitution& nu, const Substitution& nu2) {
  require_endomorphism(nu, t.num_vars());
  require_endomorphism(nu2, t.num_vars());
  return identifies_images(t, nu, nu2);
}

bool tau_of_rho_membership(const CongruenceOracle& t, const Term& w1, const Term& w2) {
  const std::size_t k = t.num_vars();
  if (k == 0) throw InputError("the canonical witness needs at least one variable");
  std::vector<Term> a, b;
  for (std::size_t i = 0; i < k; ++i) {
    a.push_back(i == 0 ? w1 : Term::var(i));
    b.push_back(i == 0 ? w2 : Term::var(i));
  }
  return rho(t, Substitution(k, std::move(a)), Substitution(k, std::move(b)));
}

EndoPairWindow::EndoPairWindow(const Signature& sig, std::size_t vars, std::size_t max_depth, std::size_t count,
                               std::uint64_t seed)
    : max_depth_(max_depth), seed_(seed), words_(enumerate_terms(sig, vars, max_depth, 200'000)) {
  if (words_.empty()) return;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    auto nu = random_substitution(vars, vars, words_, rng);
    auto nu2 = random_substitution(vars, vars, words_, rng);
    pairs_.emplace_back(std::move(nu), std::move(nu2));
  }
}

TauSampleReport tau_sample_check(const CongruenceOracle& t, const EndoPairWindow& window) {
  TauSampleReport r;
  const auto words = shallow_words(window.words());
  std::mt19937_64 rng(window.seed() ^ 0x9e3779b97f4a7c15ULL);
  for (const auto& [nu, nu_other] : window.pairs()) {
    std::vector<std::pair<Substitution, Substitution>> related;
    if (rho(t, nu, nu_other)) related.emplace_back(nu, nu_other);
    related.emplace_back(nu, related_partner(t, nu, window.words(), rng));
    for (const auto& [a, b] : related) {
      ++r.related_pairs;
      for (const auto& w : words) {
        ++r.checks;
        if (!t.decide(a.apply(w), b.apply(w))) ++r.failures;
      }
    }
  }
  return r;
}

SemiinnerData::SemiinnerData(FieldAutomorphism sigma, const Signature& sig) : sigma_(std::move(sigma)) {
  perm_.resize(sig.size());
  for (std::size_t i = 0; i < sig.size(); ++i) perm_[i] = i;
  const std::size_t q = sigma_.field()->order();
  for (std::size_t c = 0; c < q; ++c) {
    auto from = sig.find("scalar_" + std::to_string(c));
    auto to = sig.find("scalar_" + std::to_string(sigma_(static_cast<FiniteField::Elem>(c))));
    if (!from || !to) throw InputError("signature lacks scalar symbols for " + sigma_.field()->name());
    perm_[*from] = *to;
  }
}

SemiinnerData SemiinnerData::inverse() const {
  std::vector<std::size_t> inv(perm_.size());
  for (std::size_t i = 0; i < perm_.size(); ++i) inv[perm_[i]] = i;
  return SemiinnerData(sigma_.inverse(), std::move(inv));
}

Term SemiinnerData::apply(const Term& t) const { return rename_symbols(t, perm_); }
Equation SemiinnerData::apply(const Equation& e) const { return Equation{apply(e.lhs), apply(e.rhs)}; }

EquationSystem SemiinnerData::apply(const EquationSystem& s) const {
  EquationSystem out(s.vars());
  for (const auto& e : s.equations()) out.add(apply(e));
  return out;
}

Substitution SemiinnerData::apply(const Substitution& s) const {
  std::vector<Term> images;
  for (const auto& t : s.images()) images.push_back(apply(t));
  return Substitution(s.target_vars(), std::move(images));
}

AlphaResult alpha(const SemiinnerData& phi, const EquationSystem& s, const FiniteAlgebra& h1, const FiniteAlgebra& h2,
                  const UniverseBound& bound, std::size_t samples, std::uint64_t seed, const Caps& caps) {
  require_same_signature(h1, h2);
  const std::size_t k = s.num_vars();
  AlphaResult r{phi.apply(s), CongruenceOracle::closure_of_system(phi.apply(s), h2, caps)};
  const auto t = CongruenceOracle::closure_of_system(s, h1, caps);
  const auto inv = phi.inverse();

  if (k > 0) {
    TermWindow w({h2}, k, bound.max_depth, caps, bound.max_terms);
    for (std::size_t j = 1; j < w.size(); ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        ++r.window_pairs;
        const bool by_generators = r.image.decide(w.term(j), w.term(i));
        const bool by_formula = tau_of_rho_membership(t, inv.apply(w.term(j)), inv.apply(w.term(i)));
        if (by_generators != by_formula) ++r.formula_mismatches;
      }
    }
  }

  EndoPairWindow window(h1.signature(), k, bound.max_depth, samples, seed);
  if (window.words().empty()) return r;
  const WordClasses classes(window.words(), *t.points(), h1);
  const auto words = shallow_words(window.words());
  std::map<Term, std::size_t> position;
  for (std::size_t i = 0; i < window.words().size(); ++i) position.emplace(window.words()[i], i);
  std::mt19937_64 rng(seed ^ 0x5bd1e995ULL);
  for (const auto& [nu, nu_other] : window.pairs()) {
    std::vector<Term> partner;
    for (const auto& img : nu.images()) partner.push_back(window.words()[classes.partner(position.at(img), rng)]);
    const Substitution nu2(k, std::move(partner));
    const auto a = phi.apply(nu), b = phi.apply(nu2);
    for (const auto& word : words) {
      ++r.sampled_checks;
      if (!r.image.decide(a.apply(word), b.apply(word))) ++r.sampled_failures;
    }
  }
  return r;
}

NaturalityReport naturality_check(const SemiinnerData& phi, const Substitution& s, const EquationSystem& t_gens,
                                  const FiniteAlgebra& h1, const FiniteAlgebra& h2, const UniverseBound& bound,
                                  const Caps& caps) {
  require_same_signature(h1, h2);
  if (t_gens.num_vars() != s.target_vars()) throw MismatchError("system does not live on the substitution's target");
  const auto t = CongruenceOracle::closure_of_system(t_gens, h1, caps);
  const auto alpha_t = CongruenceOracle::closure_of_system(phi.apply(t_gens), h2, caps);
  const auto lhs = cl_preimage(phi.apply(s), alpha_t);
  const auto rhs_inner = cl_preimage(s, t);
  const auto inv = phi.inverse();
  NaturalityReport r;
  TermWindow w({h2}, s.source_vars(), bound.max_depth, caps, bound.max_terms);
  for (std::size_t j = 1; j < w.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      ++r.pairs;
      const bool left = lhs.decide(w.term(j), w.term(i));
      const bool right = rhs_inner.decide(inv.apply(w.term(j)), inv.apply(w.term(i)));
      if (left != right) {
        if (!r.counterexample) r.counterexample = std::make_pair(w.term(j), w.term(i));
        ++r.mismatches;
      }
    }
  }
  return r;
}

namespace {

bool compatible(const SemiinnerData& phi, const Substitution& s1, const Substitution& s2, const CongruenceOracle& t,
                const CongruenceOracle& alpha_t) {
  if (s1.source_vars() != s2.source_vars() || s1.target_vars() != s2.target_vars() ||
      s1.target_vars() != t.num_vars()) {
    throw MismatchError("substitutions do not match the congruence");
  }
  return identifies_images(t, s1, s2) == identifies_images(alpha_t, phi.apply(s1), phi.apply(s2));
}

}  // namespace

bool compatibility_check(const SemiinnerData& phi, const Substitution& s1, const Substitution& s2,
                         const EquationSystem& t_gens, const FiniteAlgebra& h1, const FiniteAlgebra& h2,
                         const Caps& caps) {
  require_same_signature(h1, h2);
  const auto t = CongruenceOracle::closure_of_system(t_gens, h1, caps);
  const auto alpha_t = CongruenceOracle::closure_of_system(phi.apply(t_gens), h2, caps);
  return compatible(phi, s1, s2, t, alpha_t);
}

CompatibilitySampleReport compatibility_sample(const SemiinnerData& phi, const EquationSystem& t_gens,
                                               const FiniteAlgebra& h1, const FiniteAlgebra& h2,
                                               std::size_t max_depth, std::size_t count, std::uint64_t seed,
                                               const Caps& caps) {
  require_same_signature(h1, h2);
  const std::size_t k = t_gens.num_vars();
  const auto t = CongruenceOracle::closure_of_system(t_gens, h1, caps);
  const auto alpha_t = CongruenceOracle::closure_of_system(phi.apply(t_gens), h2, caps);
  const auto words = enumerate_terms(h1.signature(), k, max_depth, 200'000);
  CompatibilitySampleReport r;
  if (words.empty()) return r;
  const WordClasses classes(words, *t.points(), h1);
  std::mt19937_64 rng(seed);
  for (std::size_t n = 0; n < count; ++n) {
    std::vector<Term> a, b;
    for (std::size_t y = 0; y < k; ++y) {
      const std::size_t w = below(rng, words.size());
      a.push_back(words[w]);
      b.push_back(words[n % 2 == 0 ? classes.partner(w, rng) : below(rng, words.size())]);
    }
    const Substitution s1(k, std::move(a)), s2(k, std::move(b));
    ++r.samples;
    if (identifies_images(t, s1, s2)) ++r.related;
    if (!compatible(phi, s1, s2, t, alpha_t)) ++r.failures;
  }
  return r;
}

std::uint64_t table_fingerprint(const FiniteAlgebra& h) {
  std::uint64_t f = 14695981039346656037ULL;
  f = fnv(f, h.size());
  for (std::size_t op = 0; op < h.signature().size(); ++op) {
    f = fnv(f, h.signature()[op].arity);
    std::vector<std::uint64_t> counts(h.size(), 0);
    for (auto v : h.table(op)) ++counts[v];
    std::sort(counts.begin(), counts.end());
    for (auto c : counts) f = fnv(f, c);
  }
  return f;
}

QuotientObject quotient_object(const PointSet& a, const FiniteAlgebra& h, bool reverse_generators, const Caps& caps) {
  const std::size_t k = a.space().vars;
  const auto pts = a.points();
  std::vector<std::vector<Elem>> rows(k, std::vector<Elem>(pts.size()));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) rows[i][j] = pts[j][i];
  }
  std::vector<Term> gen_terms;
  for (std::size_t i = 0; i < k; ++i) gen_terms.push_back(Term::var(i));
  if (reverse_generators) {
    std::reverse(rows.begin(), rows.end());
    std::reverse(gen_terms.begin(), gen_terms.end());
  }
  ExplicitSubpower sub(h, pts.size(), rows, caps.subpower_elements);
  const std::size_t n = sub.size();
  const Signature& sig = h.signature();
  std::vector<std::vector<Elem>> tables(sig.size());
  for (std::size_t op = 0; op < sig.size(); ++op) {
    const std::size_t ar = sig[op].arity;
    std::size_t entries = 1;
    for (std::size_t i = 0; i < ar; ++i) {
      if (entries > caps.assignments / n) throw CapExceeded("quotient model table", SIZE_MAX, caps.assignments);
      entries *= n;
    }
    tables[op].reserve(entries);
    std::vector<std::size_t> idx(ar, 0);
    std::vector<Elem> args(ar), out(pts.size());
    do {
      for (std::size_t c = 0; c < pts.size(); ++c) {
        for (std::size_t i = 0; i < ar; ++i) args[i] = sub.element(idx[i])[c];
        out[c] = h.apply(op, args.data());
      }
      tables[op].push_back(static_cast<Elem>(*sub.find(out)));
    } while (detail::next_tuple(idx, n));
  }
  QuotientObject q{k, CongruenceOracle::kernel_of_set(a, h),
                   FiniteAlgebra("W/A'", h.signature_ptr(), n, std::move(tables)), {}, 0};
  for (std::size_t i = 0; i < n; ++i) q.witnesses.push_back(sub.term(i, gen_terms));
  q.fingerprint = table_fingerprint(q.model);
  return q;
}

DualityReport duality_roundtrip(const PointSet& a, const FiniteAlgebra& h, const UniverseBound& bound,
                                const Caps& caps) {
  DualityReport r;
  const std::size_t k = a.space().vars;
  r.double_closure = double_closure_points(a, h, caps).points;
  r.set_closed = r.double_closure == a;

  TermWindow w({h}, k, bound.max_depth, caps, bound.max_terms);
  const std::size_t n = a.space().count();
  Mask roots(n);
  roots.set();
  std::vector<Mask> agreements;
  for (std::size_t j = 1; j < w.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      Mask m = w.agreement(i, j, 0);
      if (a.mask().is_subset_of(m)) {
        ++r.window_equations;
        roots &= m;
      }
      agreements.push_back(std::move(m));
    }
  }
  r.window_roots_match = roots == r.double_closure.mask();
  bool match = true;
  for (const auto& m : agreements) match = match && (a.mask().is_subset_of(m) == roots.is_subset_of(m));
  r.congruence_windows_match = match;

  const auto q = quotient_object(a, h, false, caps);
  const auto q_rev = quotient_object(a, h, true, caps);
  r.quotient_size = q.model.size();
  r.fingerprint = q.fingerprint;
  r.fingerprint_stable = q.fingerprint == q_rev.fingerprint && q.model.size() == q_rev.model.size();
  return r;
}

LatticeIsomorphismReport lattice_isomorphism_check(const SemiinnerData& phi, const VarSet& vars,
                                                   const FiniteAlgebra& h1, const FiniteAlgebra& h2,
                                                   const Caps& caps) {
  require_same_signature(h1, h2);
  const auto l1 = lattice(vars, h1, caps);
  const auto l2 = lattice(vars, h2, caps);
  LatticeIsomorphismReport r;
  r.size1 = l1.size();
  r.size2 = l2.size();
  const std::size_t k = vars.size();
  std::vector<Mask> pool2;
  for (const auto& e : l1.pool()) pool2.push_back(agreement_mask(phi.apply(e), h2, k, caps));
  const std::size_t n = l2.space().count();
  r.total = true;
  r.identity = true;
  for (std::size_t i = 0; i < l1.size(); ++i) {
    Mask m(n);
    m.set();
    for (auto e : l1.defining(i)) m &= pool2[e];
    r.generators.push_back(*l1.nodes()[i].system);
    auto j = l2.find(m);
    if (!j) {
      r.total = false;
      r.mapping.push_back(SIZE_MAX);
      continue;
    }
    r.mapping.push_back(*j);
    r.identity = r.identity && l1.nodes()[i].points.mask() == m;
  }
  if (!r.total) {
    r.identity = false;
    return r;
  }
  std::vector<char> hit(l2.size(), 0);
  r.bijective = l1.size() == l2.size();
  for (auto j : r.mapping) {
    if (hit[j]) r.bijective = false;
    hit[j] = 1;
  }
  std::set<std::pair<std::size_t, std::size_t>> mapped;
  for (const auto& [lo, hi] : l1.covers()) mapped.emplace(r.mapping[lo], r.mapping[hi]);
  const std::set<std::pair<std::size_t, std::size_t>> target(l2.covers().begin(), l2.covers().end());
  r.order_preserved = r.bijective && mapped == target;
  return r;
}

CategoryGraph export_category(std::size_t min_vars, std::size_t max_vars, const FiniteAlgebra& h, std::size_t depth,
                              const Caps& caps) {
  CategoryGraph g;
  if (min_vars > max_vars) return g;
  if (min_vars == 0) throw InputError("objects need at least one variable");
  std::map<std::size_t, std::vector<Term>> words;
  std::map<std::size_t, std::vector<std::vector<Elem>>> values;
  for (std::size_t k = min_vars; k <= max_vars; ++k) {
    const auto lat = lattice(default_vars(k), h, caps);
    for (const auto& node : lat.nodes()) g.objects.push_back({k, node.points});
    words[k] = enumerate_terms(h.signature(), k, depth, caps.hom_candidates);
    for (const auto& t : words[k]) values[k].push_back(term_values(t, h, k));
  }
  std::size_t budget = 0;
  for (std::size_t from = 0; from < g.objects.size(); ++from) {
    const auto& src = g.objects[from];
    const auto& ws = words[src.vars];
    const auto& vals = values[src.vars];
    const auto indices = src.points.indices();
    for (std::size_t to = 0; to < g.objects.size(); ++to) {
      const auto& dst = g.objects[to];
      std::map<std::vector<Point>, std::size_t> classes;
      std::vector<std::size_t> choice(dst.vars, 0);
      do {
        if (++budget > caps.hom_candidates) throw CapExceeded("category substitutions", budget, caps.hom_candidates);
        std::vector<Point> image;
        bool inside = true;
        for (auto p : indices) {
          Point q(dst.vars);
          for (std::size_t y = 0; y < dst.vars; ++y) q[y] = vals[choice[y]][p];
          inside = inside && dst.points.contains(q);
          image.push_back(std::move(q));
          if (!inside) break;
        }
        if (!inside) continue;
        auto it = classes.find(image);
        if (it != classes.end()) {
          ++g.morphisms[it->second].substitutions;
          continue;
        }
        std::vector<Term> images;
        for (auto c : choice) images.push_back(ws[c]);
        classes.emplace(image, g.morphisms.size());
        g.morphisms.push_back({from, to, Substitution(src.vars, std::move(images)), std::move(image), 1});
      } while (detail::next_tuple(choice, ws.size()));
    }
  }
  return g;
}

std::string category_dot(const CategoryGraph& g, const FiniteAlgebra& h) {
  std::ostringstream out;
  out << "digraph category {\n";
  for (std::size_t i = 0; i < g.objects.size(); ++i) {
    const auto& o = g.objects[i];
    out << "  o" << i << " [label=\"|X|=" << o.vars << " {";
    bool first = true;
    for (const auto& p : o.points.points()) {
      out << (first ? "" : ", ") << '(';
      for (std::size_t c = 0; c < p.size(); ++c) out << (c ? "," : "") << p[c];
      out << ')';
      first = false;
    }
    out << "}\"];\n";
  }
  for (const auto& m : g.morphisms) {
    const VarSet vars = default_vars(g.objects[m.from].vars);
    out << "  o" << m.from << " -> o" << m.to << " [label=\"(";
    for (std::size_t y = 0; y < m.representative.source_vars(); ++y) {
      out << (y ? ", " : "") << print_term(m.representative.image(y), h.signature(), vars);
    }
    out << ")\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace uag
