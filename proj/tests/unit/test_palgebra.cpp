#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "uag/equivalence.hpp"
#include "uag/error.hpp"
#include "uag/geometry.hpp"
#include "uag/palgebra.hpp"
#include "uag/polynomial.hpp"

using namespace uag;

namespace {

using Vec = StructureAlgebra::Vector;

const std::vector<std::string> kFixtures{"f2", "f2eps", "f4", "f4eps", "lie4", "t2", "leftunit"};

Vec random_vector(const StructureAlgebra& a, std::mt19937_64& rng) {
  Vec v(a.dim());
  for (auto& c : v) c = static_cast<FiniteField::Elem>(rng() % a.field()->order());
  return v;
}

Polynomial random_polynomial(const FieldPtr& f, std::mt19937_64& rng) {
  Polynomial p(f);
  const std::size_t terms = rng() % 5;
  for (std::size_t t = 0; t < terms; ++t) {
    AssocWord w;
    const std::size_t len = rng() % 4;
    for (std::size_t i = 0; i < len; ++i) w.letters.push_back(1 + rng() % 3);
    p.add_term(static_cast<FiniteField::Elem>(rng() % f->order()), w);
  }
  return p;
}

}  // namespace

TEST_CASE("finite fields and automorphism groups") {
  auto f2 = FiniteField::make(2, 1);
  auto f4 = FiniteField::make(2, 2);
  auto f8 = FiniteField::make(2, 3);
  CHECK(automorphism_group(f2).size() == 1);
  auto g4 = automorphism_group(f4);
  REQUIRE(g4.size() == 2);
  CHECK(g4[0].is_identity());
  CHECK(g4[1].permutation() == std::vector<FiniteField::Elem>{0, 1, 3, 2});
  for (FiniteField::Elem a = 0; a < 4; ++a) CHECK(g4[1](a) == f4->mul(a, a));
  CHECK(automorphism_group(f8).size() == 3);
  CHECK(f4->mul(2, 2) == 3);
  CHECK(f4->add(2, 3) == 1);

  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{3, 2}, {5, 1}, {2, 4}, {3, 3}}) {
    auto f = FiniteField::make(p, k);
    for (const auto& s : automorphism_group(f)) {
      for (FiniteField::Elem a = 0; a < f->order(); ++a) {
        for (FiniteField::Elem b = 0; b < f->order(); ++b) {
          CHECK(s(f->add(a, b)) == f->add(s(a), s(b)));
          CHECK(s(f->mul(a, b)) == f->mul(s(a), s(b)));
        }
      }
      CHECK(s.compose(s.inverse()).is_identity());
    }
  }
  CHECK(parse_automorphism("frob", f4) == g4[1]);
  CHECK(parse_automorphism("frob^3", f4) == g4[1]);
  CHECK_THROWS_AS(parse_automorphism("sigma", f4), InputError);
}

TEST_CASE("compile examples") {
  auto f2 = compile(fixtures::palg("f2"));
  CHECK(f2.size() == 2);

  auto eps = compile(fixtures::palg("f2eps"));
  REQUIRE(eps.size() == 4);
  const auto mul = eps.signature().index_of("*");
  const Elem e = 2;  // coordinates (0, 1)
  CHECK(eps.apply(mul, std::vector<Elem>{e, e}) == 0);
  CHECK(eps.constant(eps.signature().index_of("1")) == 1);

  auto f4a = fixtures::palg("f4");
  auto f4 = compile(f4a);
  CHECK(f4.size() == 4);
  const FiniteField& field = *f4a.field();
  for (std::size_t c = 0; c < 4; ++c) {
    const auto op = f4.signature().index_of("scalar_" + std::to_string(c));
    for (Elem x = 0; x < 4; ++x) CHECK(f4.apply(op, &x) == field.mul(static_cast<FiniteField::Elem>(c), x));
  }
  CHECK(f2.signature() == eps.signature());
  CHECK_FALSE(f2.signature() == f4.signature());

  Caps small;
  small.structure_carrier = 8;
  CHECK_THROWS_AS(compile(fixtures::palg("f4eps"), small), CapExceeded);
}

TEST_CASE("compiled tables reproduce structure-constant arithmetic") {
  std::mt19937_64 rng(7);
  for (const auto& name : kFixtures) {
    auto a = fixtures::palg(name);
    for (const auto& sigma : automorphism_group(a.field())) {
      auto at = twist(a, sigma);
      auto h = compile(at);
      const auto& lin = *h.linear();
      const auto add = h.signature().index_of("+");
      const auto mul = h.signature().index_of("*");
      for (int trial = 0; trial < 50; ++trial) {
        Vec x = random_vector(a, rng), y = random_vector(a, rng);
        const Elem ex = lin.encode(x), ey = lin.encode(y);
        CHECK(h.apply(add, std::vector<Elem>{ex, ey}) == lin.encode(at.add(x, y)));
        CHECK(h.apply(mul, std::vector<Elem>{ex, ey}) == lin.encode(at.multiply(x, y)));
        const auto lambda = static_cast<FiniteField::Elem>(rng() % a.field()->order());
        const auto sop = h.signature().index_of("scalar_" + std::to_string(lambda));
        CHECK(h.apply(sop, &ex) == lin.encode(at.scale(lambda, x)));
        CHECK(h.apply(lin.scalar_op_of[lambda], &ex) == lin.encode(a.scale(lambda, x)));
      }
    }
  }
}

TEST_CASE("twist examples") {
  auto a = fixtures::palg("f4");
  auto group = automorphism_group(a.field());
  const auto& frob = group[1];
  CHECK(twist(a, group[0]).same_structure(a));
  CHECK(twist(twist(a, frob), frob.inverse()).same_structure(a));

  auto h = compile(a);
  auto ht = compile(twist(a, frob));
  CHECK(ht.table(ht.signature().index_of("scalar_2")) == h.table(h.signature().index_of("scalar_3")));
  CHECK(ht.table(ht.signature().index_of("+")) == h.table(h.signature().index_of("+")));
  CHECK(ht.table(ht.signature().index_of("*")) == h.table(h.signature().index_of("*")));
  CHECK_FALSE(ht.same_tables(h));

  CHECK_THROWS_AS(twist(fixtures::palg("f2"), frob), MismatchError);
}

TEST_CASE("twist acts as a group action and the identity map is a semiisomorphism") {
  for (const auto& name : kFixtures) {
    auto a = fixtures::palg(name);
    auto group = automorphism_group(a.field());
    auto h = compile(a);
    for (const auto& s : group) {
      CHECK(twist(twist(a, s), s.inverse()).same_structure(a));
      for (const auto& t : group) {
        CHECK(compile(twist(twist(a, s), t)).same_tables(compile(twist(a, t.compose(s)))));
      }
      auto hs = compile(twist(a, s));
      for (std::size_t c = 0; c < a.field()->order(); ++c) {
        const auto sc = s(static_cast<FiniteField::Elem>(c));
        CHECK(h.table(h.signature().index_of("scalar_" + std::to_string(c))) ==
              hs.table(hs.signature().index_of("scalar_" + std::to_string(sc))));
      }
    }
  }
}

TEST_CASE("opposite examples") {
  auto f4eps = fixtures::palg("f4eps");
  CHECK(opposite(f4eps).same_structure(f4eps));
  auto t2 = fixtures::palg("t2");
  auto t2op = opposite(t2);
  CHECK_FALSE(t2op.same_structure(t2));
  CHECK_FALSE(compile(t2op).same_tables(compile(t2)));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 3; ++k) CHECK(t2op.constant(i, j, k) == t2.constant(j, i, k));
    }
  }
  CHECK(opposite(t2op).same_structure(t2));
  CHECK_THROWS_AS(opposite(fixtures::palg("lie4")), InputError);
}

TEST_CASE("flag verification") {
  auto f2 = FiniteField::make(2, 1);
  // e0 e0 = e1, e1 e0 = e0: not associative since (e0 e0) e0 = e0 but e0 (e0 e0) = 0.
  std::vector<FiniteField::Elem> c{0, 1, 0, 0, 1, 0, 0, 0};
  CHECK_THROWS_AS(StructureAlgebra("bad", f2, 2, c, StructureAlgebra::Kind::Associative), InputError);
  CHECK_NOTHROW(StructureAlgebra("ok", f2, 2, c));
  CHECK_THROWS_AS(StructureAlgebra("bad", f2, 2, c, StructureAlgebra::Kind::Lie), InputError);
  CHECK_THROWS_AS(StructureAlgebra("bad", f2, 2, c, StructureAlgebra::Kind::Plain, true), InputError);
  std::vector<FiniteField::Elem> z(8, 0);
  CHECK_THROWS_AS(StructureAlgebra("bad", f2, 2, z, StructureAlgebra::Kind::Associative, true, Vec{1, 0}),
                  InputError);
}

TEST_CASE("palgebra files round-trip") {
  for (const auto& name : kFixtures) {
    auto a = fixtures::palg(name);
    auto b = parse_palgebra(print_palgebra(a));
    CHECK(b.same_structure(a));
    CHECK(b.basis() == a.basis());
    CHECK(b.name() == a.name());
  }
  auto tw = twist(fixtures::palg("f4eps"), automorphism_group(FiniteField::make(2, 2))[1]);
  CHECK(print_palgebra(tw).rfind("palgebra f4eps field 2^2 dim 2 assoc comm unital 10 twist 1\n", 0) == 0);
  CHECK(parse_palgebra(print_palgebra(tw)).same_structure(tw));

  try {
    parse_palgebra("palgebra x field 2 dim 1\n1\n2\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_palgebra("palgebra x field 2 dim 1\n3\n"), ParseError);
  CHECK_THROWS_AS(parse_palgebra("palgebra x field 6 dim 1\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_palgebra("palgebra x field 2 dim 1 unital 0\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_palgebra("palgebra x field 2 dim 1 bogus\n1\n"), ParseError);
}

TEST_CASE("vector serialization") {
  CHECK(format_vector({1, 0, 3}, 4) == "103");
  CHECK(format_vector({10, 35}, 36) == "az");
  CHECK(format_vector({36, 0}, 37) == "36.0");
  CHECK(parse_vector("103", 4, 3) == Vec{1, 0, 3});
  CHECK(parse_vector("36.0", 37, 2) == Vec{36, 0});
  CHECK_THROWS_AS(parse_vector("14", 4, 2), InputError);
  CHECK_THROWS_AS(parse_vector("1", 4, 2), InputError);
}

TEST_CASE("mirror examples") {
  auto f2 = FiniteField::make(2, 1);
  auto f5 = FiniteField::make(5, 1);
  CHECK(print_polynomial(mirror(parse_polynomial("x1*x2*x3", f2))) == "x3*x2*x1");
  CHECK(print_polynomial(mirror(parse_polynomial("1", f2))) == "1");
  auto sym = parse_polynomial("x1*x2 + x2*x1", f2);
  CHECK(mirror(sym) == sym);
  CHECK(print_polynomial(parse_polynomial("x1*x2*x3 + 3*x2*x1 + 1", f5)) == "1 + 3*x2*x1 + x1*x2*x3");
  CHECK(print_polynomial(parse_polynomial("x1 + x1", f2)) == "0");
  CHECK(print_polynomial(parse_polynomial("2*x1*3", f5)) == "x1");
  try {
    parse_polynomial("x1 + y", f2);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.column() == 6);
  }
  CHECK_THROWS_AS(parse_polynomial("x0", f2), ParseError);
  CHECK_THROWS_AS(parse_polynomial("7*x1", f5), ParseError);
  CHECK_THROWS_AS(parse_polynomial("", f5), ParseError);
}

TEST_CASE("mirror is an involutive anti-automorphism on random polynomials") {
  std::mt19937_64 rng(11);
  auto f4 = FiniteField::make(2, 2);
  for (int trial = 0; trial < 200; ++trial) {
    auto u = random_polynomial(f4, rng);
    auto v = random_polynomial(f4, rng);
    CHECK(mirror(mirror(u)) == u);
    CHECK(mirror(u * v) == mirror(v) * mirror(u));
    CHECK(mirror(u + v) == mirror(u) + mirror(v));
    CHECK(parse_polynomial(print_polynomial(u), f4) == u);
  }
}

TEST_CASE("twisted_equivalent examples") {
  auto f4eps = fixtures::palg("f4eps");
  auto group = automorphism_group(f4eps.field());
  auto s = twisted_equivalent(f4eps, f4eps);
  REQUIRE(s.has_value());
  CHECK(s->is_identity());
  for (const auto& name : kFixtures) {
    auto a = fixtures::palg(name);
    for (const auto& sigma : automorphism_group(a.field())) CHECK(twisted_equivalent(a, twist(a, sigma)).has_value());
  }
  CHECK_FALSE(twisted_equivalent(fixtures::palg("f2"), fixtures::palg("f2eps")).has_value());
  CHECK_THROWS_AS(twisted_equivalent(fixtures::palg("f2"), fixtures::palg("f4")), MismatchError);
}

TEST_CASE("almost_equivalent examples") {
  auto f2eps = fixtures::palg("f2eps");
  auto w = almost_equivalent(f2eps, f2eps);
  REQUIRE(w.has_value());
  CHECK_FALSE(w->opposite_used);

  // The upper triangular algebra is isomorphic to its opposite, so the
  // twisted branch already succeeds.
  auto t2 = fixtures::palg("t2");
  auto wt = almost_equivalent(t2, opposite(t2));
  REQUIRE(wt.has_value());
  CHECK_FALSE(wt->opposite_used);

  auto b = fixtures::palg("leftunit");
  CHECK_FALSE(geometrically_equivalent(compile(b), compile(opposite(b))).equivalent);
  auto wb = almost_equivalent(b, opposite(b));
  REQUIRE(wb.has_value());
  CHECK(wb->opposite_used);
  CHECK(wb->sigma.is_identity());

  CHECK_FALSE(almost_equivalent(fixtures::palg("f2"), f2eps).has_value());
  CHECK_THROWS_AS(almost_equivalent(fixtures::palg("lie4"), fixtures::palg("lie4")), InputError);
}

TEST_CASE("linear closure route agrees with explicit subalgebra generation") {
  for (const auto& name : {"f2eps", "f4", "leftunit"}) {
    auto h = compile(fixtures::palg(name));
    auto g = fixtures::plain(h);
    const std::size_t k = 1;
    const PointSpace space{h.size(), k};
    const std::size_t n = space.count();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      PointSet a(space, bits_mask(bits, n));
      INFO(name << " subset " << bits);
      CHECK(double_closure_points(a, h).points == double_closure_points(a, g).points);
    }
  }
  std::mt19937_64 rng(5);
  for (const auto& [name, k] : std::vector<std::pair<std::string, std::size_t>>{{"f2eps", 2}, {"leftunit", 2}, {"lie4", 1}}) {
    auto h = compile(fixtures::palg(name));
    auto g = fixtures::plain(h);
    const PointSpace space{h.size(), k};
    for (int trial = 0; trial < 10; ++trial) {
      std::uint64_t bits = 0;
      for (int p = 0; p < 3; ++p) bits |= std::uint64_t{1} << (rng() % 16);
      PointSet a(space, bits_mask(bits, 16));
      INFO(name << " subset " << bits);
      CHECK(double_closure_points(a, h).points == double_closure_points(a, g).points);
    }
  }
}
