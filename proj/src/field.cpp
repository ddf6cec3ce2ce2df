#include "uag/field.hpp"

#include <stdexcept>

#include "text_util.hpp"
#include "uag/error.hpp"

namespace uag {

namespace {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

using Poly = std::vector<unsigned>;  // coefficients, lowest degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Remainder of a modulo monic m over GF(p).
Poly poly_mod(Poly a, const Poly& m, unsigned p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const unsigned lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + (p - (lead * m[i]) % p)) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

/// Irreducible iff no monic factor of degree 1..k/2 divides it.
bool irreducible(const Poly& f, unsigned p) {
  const std::size_t k = f.size() - 1;
  for (std::size_t d = 1; d * 2 <= k; ++d) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::size_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      std::size_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<unsigned>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

std::shared_ptr<const FiniteField> FiniteField::make(unsigned p, unsigned k) {
  if (!is_prime(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
  if (k == 0) throw InputError("field degree must be positive");
  std::size_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > 256) throw InputError("field order exceeds 256");
  }
  std::shared_ptr<FiniteField> F(new FiniteField());
  F->p_ = p;
  F->k_ = k;
  F->q_ = q;

  // Smallest monic irreducible of degree k, lower coefficients read as a base-p number.
  Poly f;
  for (std::size_t code = 0; code < q; ++code) {
    Poly g(k + 1, 0);
    std::size_t c = code;
    for (unsigned i = 0; i < k; ++i) {
      g[i] = static_cast<unsigned>(c % p);
      c /= p;
    }
    g[k] = 1;
    if (irreducible(g, p)) {
      f = g;
      break;
    }
  }
  F->modulus_ = f;

  auto decode = [&](std::size_t e) {
    Poly a(k, 0);
    for (unsigned i = 0; i < k; ++i) {
      a[i] = static_cast<unsigned>(e % p);
      e /= p;
    }
    trim(a);
    return a;
  };
  auto encode = [&](const Poly& a) {
    Elem e = 0;
    for (std::size_t i = a.size(); i-- > 0;) e = static_cast<Elem>(e * p + a[i]);
    return e;
  };

  F->add_.assign(q * q, 0);
  F->mul_.assign(q * q, 0);
  F->neg_.assign(q, 0);
  F->inv_.assign(q, 0);
  for (std::size_t a = 0; a < q; ++a) {
    Poly pa = decode(a);
    for (std::size_t b = 0; b < q; ++b) {
      Poly pb = decode(b);
      Poly s(k, 0);
      for (unsigned i = 0; i < k; ++i) {
        unsigned x = i < pa.size() ? pa[i] : 0;
        unsigned y = i < pb.size() ? pb[i] : 0;
        s[i] = (x + y) % p;
      }
      trim(s);
      F->add_[a * q + b] = encode(s);
      F->mul_[a * q + b] = encode(poly_mod(poly_mul(pa, pb, p), f, p));
    }
  }
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) {
      if (F->add_[a * q + b] == 0) F->neg_[a] = static_cast<Elem>(b);
      if (F->mul_[a * q + b] == 1) F->inv_[a] = static_cast<Elem>(b);
    }
  }

  // Exhaustive verification of the field axioms.
  auto check = [](bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("field construction failed: ") + what);
  };
  for (std::size_t a = 0; a < q; ++a) {
    check(F->add(static_cast<Elem>(a), 0) == a && F->mul(static_cast<Elem>(a), 1) == a, "identities");
    check(F->add(static_cast<Elem>(a), F->neg_[a]) == 0, "additive inverse");
    if (a) check(F->mul(static_cast<Elem>(a), F->inv_[a]) == 1, "multiplicative inverse");
    for (std::size_t b = 0; b < q; ++b) {
      const Elem A = static_cast<Elem>(a), B = static_cast<Elem>(b);
      check(F->add(A, B) == F->add(B, A) && F->mul(A, B) == F->mul(B, A), "commutativity");
      for (std::size_t c = 0; c < q; ++c) {
        const Elem C = static_cast<Elem>(c);
        check(F->add(F->add(A, B), C) == F->add(A, F->add(B, C)), "additive associativity");
        check(F->mul(F->mul(A, B), C) == F->mul(A, F->mul(B, C)), "multiplicative associativity");
        check(F->mul(A, F->add(B, C)) == F->add(F->mul(A, B), F->mul(A, C)), "distributivity");
      }
    }
  }

  for (std::size_t g = 1; g < q; ++g) {
    std::size_t order = 1;
    Elem x = static_cast<Elem>(g);
    while (x != 1) {
      x = F->mul(x, static_cast<Elem>(g));
      ++order;
    }
    if (order == q - 1) {
      F->primitive_ = static_cast<Elem>(g);
      break;
    }
  }
  return F;
}

std::shared_ptr<const FiniteField> FiniteField::parse(const std::string& spec) {
  auto caret = spec.find('^');
  if (caret != std::string::npos) {
    auto p = detail::parse_uint(spec.substr(0, caret));
    auto k = detail::parse_uint(spec.substr(caret + 1));
    if (!p || !k) throw InputError("bad field '" + spec + "', expected p^k");
    return make(static_cast<unsigned>(*p), static_cast<unsigned>(*k));
  }
  auto q = detail::parse_uint(spec);
  if (!q || *q < 2) throw InputError("bad field '" + spec + "'");
  for (unsigned p = 2; p <= *q; ++p) {
    if (*q % p) continue;
    std::uint64_t r = *q;
    unsigned k = 0;
    while (r % p == 0) {
      r /= p;
      ++k;
    }
    if (r != 1) throw InputError("field order " + spec + " is not a prime power");
    return make(p, k);
  }
  throw InputError("bad field '" + spec + "'");
}

std::string FiniteField::name() const {
  return k_ == 1 ? "GF(" + std::to_string(p_) + ")" : "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ")";
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return inv_[a];
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  Elem b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

FieldAutomorphism FieldAutomorphism::frobenius_power(FieldPtr field, unsigned exponent) {
  FieldAutomorphism s;
  s.exponent_ = exponent % field->degree();
  std::uint64_t power = 1;
  for (unsigned i = 0; i < s.exponent_; ++i) power *= field->characteristic();
  s.perm_.resize(field->order());
  for (std::size_t a = 0; a < field->order(); ++a) s.perm_[a] = field->pow(static_cast<Elem>(a), power);
  s.field_ = std::move(field);
  return s;
}

FieldAutomorphism FieldAutomorphism::inverse() const {
  const unsigned k = field_->degree();
  return frobenius_power(field_, (k - exponent_) % k);
}

FieldAutomorphism FieldAutomorphism::compose(const FieldAutomorphism& other) const {
  if (!(*field_ == *other.field_)) throw MismatchError("automorphisms of different fields");
  return frobenius_power(field_, exponent_ + other.exponent_);
}

std::string FieldAutomorphism::name() const {
  if (exponent_ == 0) return "id";
  if (exponent_ == 1) return "frob";
  return "frob^" + std::to_string(exponent_);
}

std::vector<FieldAutomorphism> automorphism_group(const FieldPtr& field) {
  std::vector<FieldAutomorphism> out;
  for (unsigned e = 0; e < field->degree(); ++e) out.push_back(FieldAutomorphism::frobenius_power(field, e));
  return out;
}

FieldAutomorphism parse_automorphism(const std::string& spec, const FieldPtr& field) {
  if (spec == "id") return FieldAutomorphism::identity(field);
  if (spec == "frob") return FieldAutomorphism::frobenius_power(field, 1);
  if (spec.rfind("frob^", 0) == 0) {
    auto e = detail::parse_uint(spec.substr(5));
    if (e) return FieldAutomorphism::frobenius_power(field, static_cast<unsigned>(*e % field->degree()));
  }
  throw InputError("bad automorphism '" + spec + "', expected id, frob or frob^e");
}

}  // namespace uag
