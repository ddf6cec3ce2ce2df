#include "doctest.h"
#include "fixtures.hpp"
#include "uag/equivalence.hpp"
#include "uag/error.hpp"
#include "uag/geometry.hpp"

using namespace uag;

namespace {

const VarSet kXY{"x", "y"};

bool same_pair(const Distinction& d, const Term& a, const Term& b) {
  return (d.w0 == a && d.w0p == b) || (d.w0 == b && d.w0p == a);
}

/// Independent certificate check: every listed map is a homomorphism and
/// the list separates all points.
bool valid_certificate(const EmbeddingCertificate& c, const FiniteAlgebra& h1, const FiniteAlgebra& h2) {
  for (const auto& f : c.homs) {
    if (!is_homomorphism(f, h1, h2)) return false;
  }
  for (Elem a = 0; a < h1.size(); ++a) {
    for (Elem b = a + 1; b < h1.size(); ++b) {
      bool sep = false;
      for (const auto& f : c.homs) sep = sep || f[a] != f[b];
      if (!sep) return false;
    }
  }
  return true;
}

std::vector<FiniteAlgebra> group_fixtures() {
  return {fixtures::z2(), fixtures::z3(), fixtures::z4(), fixtures::z2xz2()};
}

}  // namespace

TEST_CASE("separates examples") {
  auto z2 = fixtures::z2();
  auto z4 = fixtures::z4();
  auto v = fixtures::z2xz2();

  auto r = separates(z2, z2);
  REQUIRE(r.separated());
  CHECK(r.certificate->homs == std::vector<ElemMap>{{0, 1}});
  CHECK(r.certificate->exponent() == 1);

  auto r2 = separates(z4, z2);
  CHECK_FALSE(r2.separated());
  REQUIRE(r2.counterexample.has_value());
  CHECK(*r2.counterexample == std::pair<Elem, Elem>{0, 2});
  CHECK(r2.hom_count == 2);

  auto r3 = separates(z2, v);
  REQUIRE(r3.separated());
  CHECK(r3.certificate->homs == std::vector<ElemMap>{{0, 1}});
  CHECK(valid_certificate(*r3.certificate, z2, v));
}

TEST_CASE("geometrically_equivalent examples") {
  auto z2 = fixtures::z2();
  auto z4 = fixtures::z4();
  auto v = fixtures::z2xz2();
  auto e = geometrically_equivalent(z2, v);
  CHECK(e.equivalent);
  REQUIRE(e.backward.separated());
  CHECK(e.backward.certificate->exponent() == 2);
  CHECK(valid_certificate(*e.backward.certificate, v, z2));

  auto ne = geometrically_equivalent(z2, z4);
  CHECK_FALSE(ne.equivalent);
  CHECK(ne.forward.separated());
  REQUIRE(ne.backward.counterexample.has_value());
  CHECK(*ne.backward.counterexample == std::pair<Elem, Elem>{0, 2});

  for (const auto& h : group_fixtures()) CHECK(geometrically_equivalent(h, h).equivalent);
  CHECK(geometrically_equivalent(fixtures::sl2(), fixtures::sl2()).equivalent);
}

TEST_CASE("H is equivalent to H x H") {
  std::vector<FiniteAlgebra> all = group_fixtures();
  all.push_back(fixtures::sl2());
  all.push_back(fixtures::z2ring());
  for (const auto& h : all) {
    INFO(h.name());
    auto sq = product(h, h);
    auto v = geometrically_equivalent(h, sq);
    CHECK(v.equivalent);
    if (v.equivalent) {
      CHECK(valid_certificate(*v.forward.certificate, h, sq));
      CHECK(valid_certificate(*v.backward.certificate, sq, h));
    }
  }
}

TEST_CASE("geometric equivalence is symmetric and transitive on group fixtures") {
  auto algebras = group_fixtures();
  algebras.push_back(product(fixtures::z2(), fixtures::z4()));
  const std::size_t n = algebras.size();
  std::vector<std::vector<bool>> eq(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) eq[i][j] = geometrically_equivalent(algebras[i], algebras[j]).equivalent;
  }
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(eq[i][i]);
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(eq[i][j] == eq[j][i]);
      for (std::size_t k = 0; k < n; ++k) {
        if (eq[i][j] && eq[j][k]) CHECK(eq[i][k]);
      }
    }
  }
  // Z4 and Z2 x Z4 embed into powers of each other.
  CHECK(eq[2][4]);
  CHECK_FALSE(eq[0][2]);
}

TEST_CASE("cross_validate_equivalence examples") {
  auto z2 = fixtures::z2();
  auto z4 = fixtures::z4();
  UniverseBound bound;

  auto r = cross_validate_equivalence(z2, z4, bound);
  CHECK_FALSE(r.agreement);
  REQUIRE(r.distinction.has_value());
  CHECK(r.distinction->in_first != r.distinction->in_second);
  // Independent check of the reported distinction.
  const auto& d = *r.distinction;
  CHECK(closure_membership(d.system, z2, d.w0, d.w0p) == d.in_first);
  CHECK(closure_membership(d.system, z4, d.w0, d.w0p) == d.in_second);

  auto t = fixtures::sys(z2, kXY, {"x+y = 0"});
  auto fd = find_distinction_for_system(z2, z4, t, bound);
  REQUIRE(fd.has_value());
  CHECK(same_pair(*fd, Term::var(0), Term::var(1)));
  CHECK(fd->in_first);
  CHECK_FALSE(fd->in_second);

  auto ok = cross_validate_equivalence(z2, fixtures::z2xz2(), bound);
  CHECK(ok.agreement);
  CHECK(ok.windows.size() == 6);
  CHECK(cross_validate_equivalence(z4, z4, bound).agreement);
}

TEST_CASE("decision agrees with window cross-validation on fixture pairs") {
  auto algebras = group_fixtures();
  UniverseBound bound;
  for (const auto& a : algebras) {
    for (const auto& b : algebras) {
      INFO(a.name() << " vs " << b.name());
      const bool eq = geometrically_equivalent(a, b).equivalent;
      auto r = cross_validate_equivalence(a, b, bound);
      CHECK(eq == r.agreement);
    }
  }
}

TEST_CASE("class_closure_membership") {
  auto z2 = fixtures::z2();
  auto z4 = fixtures::z4();
  auto t = fixtures::sys(z2, kXY, {"x+y = 0"});
  FiniteClass both({z2, z4});
  FiniteClass single({z2});
  const Term x = Term::var(0), y = Term::var(1);
  CHECK_FALSE(class_closure_membership(both, t, x, y));
  CHECK(class_closure_membership(single, t, x, y) == closure_membership(t, z2, x, y));
  for (const auto& e : t.equations()) CHECK(class_closure_membership(both, t, e.lhs, e.rhs));
  CHECK_THROWS_AS(FiniteClass({}), InputError);
  CHECK_THROWS_AS(FiniteClass({z2, fixtures::sl2()}), MismatchError);
}

TEST_CASE("finite_basis examples") {
  auto z2 = fixtures::z2();
  auto t = fixtures::sys(z2, kXY, {"x+y = 0", "y+x = 0", "x+x+x+y+y+y = 0"});
  auto t0 = finite_basis(t, z2);
  CHECK(t0.equations() == fixtures::sys(z2, kXY, {"x+y = 0"}).equations());
  CHECK(solution_set(t0, z2).points == solution_set(t, z2).points);

  CHECK(finite_basis(fixtures::sys(z2, kXY, {"x = x"}), z2).size() == 0);
  auto one = fixtures::sys(z2, kXY, {"x = y"});
  CHECK(finite_basis(one, z2).equations() == one.equations());
}

TEST_CASE("finite_basis drops equations made redundant later") {
  auto z4 = fixtures::z4();
  // x+x = 0 shrinks first, then x = 0 implies it.
  auto t = fixtures::sys(z4, kXY, {"x+x = 0", "x = 0", "y+y = 0"});
  auto t0 = finite_basis(t, z4);
  CHECK(t0.equations() == fixtures::sys(z4, kXY, {"x = 0", "y+y = 0"}).equations());
  CHECK(solution_set(t0, z4).points == solution_set(t, z4).points);
}

TEST_CASE("directed_union_demo") {
  auto z4 = fixtures::z4();
  UniverseBound bound;
  std::vector<EquationSystem> chain{fixtures::sys(z4, kXY, {"x+x = 0"}), fixtures::sys(z4, kXY, {"x+x = 0", "y+y = 0"}),
                                    fixtures::sys(z4, kXY, {"x+x = 0", "y+y = 0", "x = 0"})};
  auto r = directed_union_demo(chain, z4, bound);
  CHECK(r.solution_sizes == std::vector<std::size_t>{8, 4, 2});
  CHECK(r.stabilization_index == 3);
  CHECK(r.strict_steps == 2);
  CHECK(r.point_count == 16);
  CHECK(r.union_closed);
  CHECK(r.stable_matches);
  CHECK(r.window_pairs_in_union > 0);

  std::vector<EquationSystem> constant(3, chain[0]);
  auto c = directed_union_demo(constant, z4, bound);
  CHECK(c.stabilization_index == 1);
  CHECK(c.strict_steps == 0);
  CHECK(c.union_closed);

  auto single = directed_union_demo({chain[1]}, z4, bound);
  CHECK(single.stabilization_index == 1);
  CHECK(single.union_closed);

  CHECK_THROWS_AS(directed_union_demo({chain[2], chain[0]}, z4, bound), InputError);
}

TEST_CASE("same_identities_window examples") {
  auto z2 = fixtures::z2();
  auto z4 = fixtures::z4();
  UniverseBound bound;
  auto r = same_identities_window(z2, z4, bound);
  CHECK_FALSE(r.agree);
  REQUIRE(r.counterexample.has_value());
  CHECK(print_equation(*r.counterexample, z2.signature(), r.vars) == "x+x = 0");
  CHECK(r.holds_in_first);

  CHECK(same_identities_window(z2, fixtures::z2xz2(), bound).agree);
  CHECK(same_identities_window(z4, z4, bound).agree);

  for (const auto& a : group_fixtures()) {
    for (const auto& b : group_fixtures()) {
      if (geometrically_equivalent(a, b).equivalent) CHECK(same_identities_window(a, b, bound).agree);
    }
  }
}
