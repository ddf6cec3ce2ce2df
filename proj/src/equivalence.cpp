#include "uag/equivalence.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "uag/error.hpp"
#include "uag/geometry.hpp"
#include "uag/window.hpp"

namespace uag {

SeparationResult separates(const FiniteAlgebra& h1, const FiniteAlgebra& h2, const Caps& caps) {
  require_same_signature(h1, h2);
  const auto homs = enumerate_homs(h1, h2, caps);
  SeparationResult r;
  r.hom_count = homs.size();
  const std::size_t n = h1.size();
  std::vector<char> separated(n * n, 0);
  std::size_t remaining = n * (n - 1) / 2;
  EmbeddingCertificate cert;
  for (const auto& f : homs) {
    if (remaining == 0) break;
    bool useful = false;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (!separated[a * n + b] && f[a] != f[b]) {
          separated[a * n + b] = 1;
          --remaining;
          useful = true;
        }
      }
    }
    if (useful) cert.homs.push_back(f);
  }
  if (remaining == 0) {
    r.certificate = std::move(cert);
    return r;
  }
  for (std::size_t a = 0; a < n && !r.counterexample; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!separated[a * n + b]) {
        r.counterexample = std::make_pair(static_cast<Elem>(a), static_cast<Elem>(b));
        break;
      }
    }
  }
  return r;
}

EquivalenceVerdict geometrically_equivalent(const FiniteAlgebra& h1, const FiniteAlgebra& h2, const Caps& caps) {
  EquivalenceVerdict v;
  v.forward = separates(h1, h2, caps);
  v.backward = separates(h2, h1, caps);
  v.equivalent = v.forward.separated() && v.backward.separated();
  return v;
}

namespace {

std::string mask_key(const Mask& m) {
  std::vector<Mask::block_type> blocks(m.num_blocks());
  boost::to_block_range(m, blocks.begin());
  return std::string(reinterpret_cast<const char*>(blocks.data()), blocks.size() * sizeof(Mask::block_type));
}

/// Agreement of terms i and j on both algebras, as one mask of N1 + N2 bits.
Mask joint_agreement(const TermWindow& w, std::size_t i, std::size_t j) {
  const std::size_t n1 = w.space(0).count();
  const std::size_t n2 = w.space(1).count();
  Mask m(n1 + n2);
  const Elem* a1 = w.values(i, 0);
  const Elem* b1 = w.values(j, 0);
  for (std::size_t p = 0; p < n1; ++p) {
    if (a1[p] == b1[p]) m.set(p);
  }
  const Elem* a2 = w.values(i, 1);
  const Elem* b2 = w.values(j, 1);
  for (std::size_t p = 0; p < n2; ++p) {
    if (a2[p] == b2[p]) m.set(n1 + p);
  }
  return m;
}

/// Membership of a pair with agreement `agree` in the closure of a system
/// with solution set `sol`, for each half of a joint mask.
std::pair<bool, bool> joint_membership(const Mask& sol, const Mask& agree, std::size_t n1) {
  Mask diff = sol - agree;
  auto first = diff.find_first();
  const bool in1 = first == Mask::npos || first >= n1;
  const bool in2 = n1 == 0 ? diff.none() : (diff.find_next(n1 - 1) == Mask::npos);
  return {in1, in2};
}

struct EqClass {
  Mask mask;
  std::size_t lhs;  // newer term
  std::size_t rhs;  // earlier term
};

/// Equation classes of a joint window: pairs (t_j, t_i), i < j, deduplicated
/// by joint agreement mask, first occurrence kept.
std::vector<EqClass> equation_classes(const TermWindow& w, const UniverseBound& bound) {
  const std::size_t pairs = w.size() * (w.size() - 1) / 2;
  if (pairs > bound.max_pairs) throw CapExceeded("window equation pairs", pairs, bound.max_pairs);
  std::vector<EqClass> out;
  std::unordered_set<std::string> seen;
  for (std::size_t j = 1; j < w.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      Mask m = joint_agreement(w, i, j);
      if (seen.insert(mask_key(m)).second) out.push_back({std::move(m), j, i});
    }
  }
  return out;
}

struct SysClass {
  Mask sol;
  std::vector<std::size_t> eqs;  // indices into the equation classes
};

/// Systems of at most `max_size` equation classes, deduplicated by joint
/// solution set, in order of size and then lexicographically.
std::vector<SysClass> system_classes(const std::vector<EqClass>& eqs, std::size_t max_size, std::size_t total_bits,
                                     const UniverseBound& bound) {
  std::vector<SysClass> out;
  std::unordered_set<std::string> seen;
  Mask full(total_bits);
  full.set();
  seen.insert(mask_key(full));
  out.push_back({full, {}});
  std::vector<SysClass> frontier{out.back()};
  std::size_t produced = 0;
  for (std::size_t size = 1; size <= max_size; ++size) {
    std::vector<SysClass> next;
    for (const auto& s : frontier) {
      const std::size_t start = s.eqs.empty() ? 0 : s.eqs.back() + 1;
      for (std::size_t e = start; e < eqs.size(); ++e) {
        if (++produced > bound.max_pairs) throw CapExceeded("window systems", produced, bound.max_pairs);
        SysClass t{s.sol & eqs[e].mask, s.eqs};
        t.eqs.push_back(e);
        if (seen.insert(mask_key(t.sol)).second) out.push_back(t);
        next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

EquationSystem system_of(const SysClass& s, const std::vector<EqClass>& eqs, const TermWindow& w) {
  EquationSystem sys(default_vars(w.num_vars()));
  for (auto e : s.eqs) sys.add(Equation{w.term(eqs[e].lhs), w.term(eqs[e].rhs)});
  return sys;
}

}  // namespace

CrossValidationReport cross_validate_equivalence(const FiniteAlgebra& h1, const FiniteAlgebra& h2,
                                                 const UniverseBound& bound, const Caps& caps) {
  require_same_signature(h1, h2);
  CrossValidationReport report;
  report.bound = bound;
  for (std::size_t k = 1; k <= bound.max_vars; ++k) {
    for (std::size_t d = 0; d <= bound.max_depth; ++d) {
      TermWindow w({h1, h2}, k, d, caps, bound.max_terms);
      const std::size_t n1 = w.space(0).count();
      const std::size_t n2 = w.space(1).count();
      auto eqs = equation_classes(w, bound);
      auto systems = system_classes(eqs, bound.max_system_size, n1 + n2, bound);
      WindowStats stats{k, d, w.size(), eqs.size(), systems.size(), 0};
      for (const auto& s : systems) {
        for (const auto& e : eqs) {
          ++stats.checks;
          auto [in1, in2] = joint_membership(s.sol, e.mask, n1);
          if (in1 != in2) {
            report.agreement = false;
            report.distinction = Distinction{system_of(s, eqs, w), w.term(e.lhs), w.term(e.rhs), in1, in2, k, d};
            report.windows.push_back(stats);
            return report;
          }
        }
      }
      report.windows.push_back(stats);
    }
  }
  return report;
}

std::optional<Distinction> find_distinction_for_system(const FiniteAlgebra& h1, const FiniteAlgebra& h2,
                                                       const EquationSystem& t, const UniverseBound& bound,
                                                       const Caps& caps) {
  require_same_signature(h1, h2);
  const std::size_t k = t.num_vars();
  const Mask s1 = solution_set(t, h1, caps).points.mask();
  const Mask s2 = solution_set(t, h2, caps).points.mask();
  Mask sol(s1.size() + s2.size());
  for (std::size_t p = 0; p < s1.size(); ++p) sol[p] = s1[p];
  for (std::size_t p = 0; p < s2.size(); ++p) sol[s1.size() + p] = s2[p];
  for (std::size_t d = 0; d <= bound.max_depth; ++d) {
    TermWindow w({h1, h2}, k, d, caps, bound.max_terms);
    for (const auto& e : equation_classes(w, bound)) {
      auto [in1, in2] = joint_membership(sol, e.mask, s1.size());
      if (in1 != in2) return Distinction{t, w.term(e.lhs), w.term(e.rhs), in1, in2, k, d};
    }
  }
  return std::nullopt;
}

FiniteClass::FiniteClass(std::vector<FiniteAlgebra> algebras) : algebras_(std::move(algebras)) {
  if (algebras_.empty()) throw InputError("a class must contain at least one algebra");
  for (std::size_t i = 1; i < algebras_.size(); ++i) require_same_signature(algebras_[0], algebras_[i]);
}

bool class_closure_membership(const FiniteClass& cls, const EquationSystem& t, const Term& w0, const Term& w0p,
                              const Caps& caps) {
  for (const auto& h : cls.algebras()) {
    if (!closure_membership(t, h, w0, w0p, caps)) return false;
  }
  return true;
}

EquationSystem finite_basis(const EquationSystem& t, const FiniteAlgebra& h, const Caps& caps) {
  const std::size_t k = t.num_vars();
  const std::size_t n = PointSpace{h.size(), k}.count(caps.assignments);
  std::vector<Mask> masks;
  for (const auto& e : t.equations()) masks.push_back(agreement_mask(e, h, k, caps));
  Mask cur(n);
  cur.set();
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    Mask next = cur & masks[i];
    if (next != cur) {
      kept.push_back(i);
      cur = std::move(next);
    }
  }
  const Mask target = cur;
  // Irredundancy pass in the same order.
  for (std::size_t pos = 0; pos < kept.size();) {
    Mask without(n);
    without.set();
    for (std::size_t q = 0; q < kept.size(); ++q) {
      if (q != pos) without &= masks[kept[q]];
    }
    if (without == target) {
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(pos));
    } else {
      ++pos;
    }
  }
  EquationSystem out(t.vars());
  for (auto i : kept) out.add(t.equations()[i]);
  return out;
}

DirectedUnionReport directed_union_demo(const std::vector<EquationSystem>& chain, const FiniteAlgebra& h,
                                        const UniverseBound& bound, const Caps& caps) {
  if (chain.empty()) throw InputError("chain must be nonempty");
  const std::size_t k = chain[0].num_vars();
  for (const auto& t : chain) {
    if (t.vars() != chain[0].vars()) throw MismatchError("chain members over different variable sets");
  }
  DirectedUnionReport r;
  r.point_count = PointSpace{h.size(), k}.count(caps.assignments);
  std::vector<Mask> sols;
  for (const auto& t : chain) {
    sols.push_back(solution_set(t, h, caps).points.mask());
    r.solution_sizes.push_back(sols.back().count());
  }
  for (std::size_t i = 0; i + 1 < sols.size(); ++i) {
    if (!sols[i + 1].is_subset_of(sols[i])) {
      throw InputError("chain not directed: member " + std::to_string(i + 2) + " does not refine member " +
                       std::to_string(i + 1));
    }
    if (sols[i + 1] != sols[i]) ++r.strict_steps;
  }
  r.stabilization_index = sols.size();
  while (r.stabilization_index > 1 && sols[r.stabilization_index - 2] == sols.back()) --r.stabilization_index;

  EquationSystem uni(chain[0].vars());
  for (const auto& t : chain) {
    for (const auto& e : t.equations()) uni.add(e);
  }
  const Mask usol = solution_set(uni, h, caps).points.mask();

  TermWindow w({h}, k, bound.max_depth, caps, bound.max_terms);
  r.window_terms = w.size();
  const Mask& stable = sols[r.stabilization_index - 1];
  bool union_closed = true;
  bool stable_matches = true;
  for (std::size_t j = 1; j < w.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const Mask agree = w.agreement(i, j, 0);
      bool in_some = false;
      for (const auto& s : sols) in_some = in_some || s.is_subset_of(agree);
      const bool in_union = usol.is_subset_of(agree);
      if (in_union) ++r.window_pairs_in_union;
      union_closed = union_closed && (in_some == in_union);
      stable_matches = stable_matches && (stable.is_subset_of(agree) == in_union);
    }
  }
  r.union_closed = union_closed;
  r.stable_matches = stable_matches;
  return r;
}

IdentityComparison same_identities_window(const FiniteAlgebra& h1, const FiniteAlgebra& h2,
                                          const UniverseBound& bound, const Caps& caps) {
  require_same_signature(h1, h2);
  IdentityComparison r;
  for (std::size_t k = 1; k <= bound.max_vars; ++k) {
    for (std::size_t d = 0; d <= bound.max_depth; ++d) {
      TermWindow w({h1, h2}, k, d, caps, bound.max_terms);
      for (std::size_t j = 1; j < w.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
          const bool id1 = w.agreement(i, j, 0).all();
          const bool id2 = w.agreement(i, j, 1).all();
          if (id1 != id2) {
            r.agree = false;
            r.counterexample = Equation{w.term(j), w.term(i)};
            r.vars = default_vars(k);
            r.holds_in_first = id1;
            return r;
          }
        }
      }
    }
  }
  return r;
}

}  // namespace uag
