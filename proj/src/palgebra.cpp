#include "uag/palgebra.hpp"

#include <sstream>

#include "text_util.hpp"
#include "uag/equivalence.hpp"
#include "uag/error.hpp"

namespace uag {

namespace {

using FElem = FiniteField::Elem;

std::vector<std::string> default_basis(std::size_t dim) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < dim; ++i) out.push_back("e" + std::to_string(i));
  return out;
}

StructureAlgebra::Vector basis_vector(std::size_t dim, std::size_t i) {
  StructureAlgebra::Vector v(dim, 0);
  v[i] = 1;
  return v;
}

const char* kind_word(StructureAlgebra::Kind k) {
  switch (k) {
    case StructureAlgebra::Kind::Associative:
      return "assoc";
    case StructureAlgebra::Kind::Lie:
      return "lie";
    case StructureAlgebra::Kind::Plain:
      break;
  }
  return "";
}

}  // namespace

StructureAlgebra::StructureAlgebra(std::string name, FieldPtr field, std::size_t dim, std::vector<FElem> constants,
                                   Kind kind, bool commutative, std::optional<Vector> unit, unsigned twist,
                                   std::vector<std::string> basis)
    : name_(std::move(name)),
      field_(std::move(field)),
      dim_(dim),
      constants_(std::move(constants)),
      kind_(kind),
      commutative_(commutative),
      unit_(std::move(unit)),
      twist_(0),
      basis_(std::move(basis)) {
  if (!field_) throw InputError("structure algebra needs a field");
  if (dim_ == 0) throw InputError("dimension must be positive");
  if (constants_.size() != dim_ * dim_ * dim_) {
    throw InputError("expected " + std::to_string(dim_ * dim_ * dim_) + " structure constants, got " +
                     std::to_string(constants_.size()));
  }
  const std::size_t q = field_->order();
  for (auto c : constants_) {
    if (c >= q) throw InputError("structure constant " + std::to_string(c) + " outside " + field_->name());
  }
  twist_ = twist % field_->degree();
  if (basis_.empty()) basis_ = default_basis(dim_);
  if (basis_.size() != dim_) throw InputError("basis label count differs from the dimension");

  auto e = [&](std::size_t i) { return basis_vector(dim_, i); };
  auto label = [&](std::size_t i) { return basis_[i]; };
  if (commutative_) {
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) {
        if (multiply(e(i), e(j)) != multiply(e(j), e(i))) {
          throw InputError("not commutative: " + label(i) + "*" + label(j) + " != " + label(j) + "*" + label(i));
        }
      }
    }
  }
  if (kind_ == Kind::Associative) {
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) {
        for (std::size_t k = 0; k < dim_; ++k) {
          if (multiply(multiply(e(i), e(j)), e(k)) != multiply(e(i), multiply(e(j), e(k)))) {
            throw InputError("not associative on (" + label(i) + ", " + label(j) + ", " + label(k) + ")");
          }
        }
      }
    }
  }
  if (kind_ == Kind::Lie) {
    if (unit_) throw InputError("a Lie algebra cannot be unital");
    const Vector zero(dim_, 0);
    auto neg = [&](const Vector& v) {
      Vector out(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) out[i] = field_->neg(v[i]);
      return out;
    };
    for (std::size_t i = 0; i < dim_; ++i) {
      if (multiply(e(i), e(i)) != zero) throw InputError("not alternating: [" + label(i) + ", " + label(i) + "] != 0");
      for (std::size_t j = 0; j < dim_; ++j) {
        if (multiply(e(i), e(j)) != neg(multiply(e(j), e(i)))) {
          throw InputError("not antisymmetric on (" + label(i) + ", " + label(j) + ")");
        }
        for (std::size_t k = 0; k < dim_; ++k) {
          Vector s = add(add(multiply(multiply(e(i), e(j)), e(k)), multiply(multiply(e(j), e(k)), e(i))),
                         multiply(multiply(e(k), e(i)), e(j)));
          if (s != zero) throw InputError("Jacobi identity fails on (" + label(i) + ", " + label(j) + ", " + label(k) + ")");
        }
      }
    }
  }
  if (unit_) {
    if (unit_->size() != dim_) throw InputError("unit vector has the wrong length");
    for (auto c : *unit_) {
      if (c >= q) throw InputError("unit coordinate outside the field");
    }
    for (std::size_t i = 0; i < dim_; ++i) {
      if (multiply(*unit_, e(i)) != e(i) || multiply(e(i), *unit_) != e(i)) {
        throw InputError("declared unit does not act as identity on " + label(i));
      }
    }
  }
}

StructureAlgebra::Vector StructureAlgebra::multiply(const Vector& a, const Vector& b) const {
  Vector out(dim_, 0);
  const FiniteField& f = *field_;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j] == 0) continue;
      const FElem ab = f.mul(a[i], b[j]);
      for (std::size_t k = 0; k < dim_; ++k) out[k] = f.add(out[k], f.mul(ab, constant(i, j, k)));
    }
  }
  return out;
}

StructureAlgebra::Vector StructureAlgebra::add(const Vector& a, const Vector& b) const {
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[i] = field_->add(a[i], b[i]);
  return out;
}

StructureAlgebra::Vector StructureAlgebra::scale(FElem lambda, const Vector& a) const {
  const FElem c = FieldAutomorphism::frobenius_power(field_, twist_).inverse()(lambda);
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[i] = field_->mul(c, a[i]);
  return out;
}

std::size_t StructureAlgebra::carrier_size() const {
  std::size_t n = 1;
  const std::size_t q = field_->order();
  for (std::size_t i = 0; i < dim_; ++i) {
    if (n > SIZE_MAX / q) return SIZE_MAX;
    n *= q;
  }
  return n;
}

StructureAlgebra StructureAlgebra::renamed(std::string name) const {
  StructureAlgebra out = *this;
  out.name_ = std::move(name);
  return out;
}

bool StructureAlgebra::same_structure(const StructureAlgebra& o) const {
  return *field_ == *o.field_ && dim_ == o.dim_ && constants_ == o.constants_ && kind_ == o.kind_ &&
         commutative_ == o.commutative_ && unit_ == o.unit_ && twist_ == o.twist_;
}

FiniteAlgebra compile(const StructureAlgebra& a, const Caps& caps) {
  const std::size_t n = a.carrier_size();
  if (n > caps.structure_carrier) throw CapExceeded("structure algebra carrier", n, caps.structure_carrier);
  const FiniteField& f = *a.field();
  const std::size_t q = f.order();
  const std::size_t d = a.dim();

  auto sig = std::make_shared<Signature>();
  const std::size_t add_op = sig->add({"+", 2, 1});
  const std::size_t mul_op = sig->add({"*", 2, 2});
  const std::size_t neg_op = sig->add({"-", 1, std::nullopt});
  const std::size_t zero_op = sig->add({"0", 0, std::nullopt});
  std::optional<std::size_t> one_op;
  if (a.unit()) one_op = sig->add({"1", 0, std::nullopt});
  const std::size_t first_scalar = sig->size();
  for (std::size_t c = 0; c < q; ++c) sig->add({"scalar_" + std::to_string(c), 1, std::nullopt});

  auto lin = std::make_shared<LinearStructure>();
  lin->field = a.field();
  lin->dim = d;
  lin->add_op = add_op;
  lin->mul_op = mul_op;
  lin->neg_op = neg_op;
  lin->zero_op = zero_op;
  lin->one_op = one_op;
  const auto sigma = FieldAutomorphism::frobenius_power(a.field(), a.twist_exponent());
  for (std::size_t c = 0; c < q; ++c) lin->scalar_op_of.push_back(first_scalar + sigma(static_cast<FElem>(c)));

  std::vector<StructureAlgebra::Vector> vec(n);
  for (std::size_t e = 0; e < n; ++e) vec[e] = lin->digits(static_cast<Elem>(e));

  std::vector<std::vector<Elem>> tables(sig->size());
  tables[add_op].resize(n * n);
  tables[mul_op].resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      tables[add_op][x * n + y] = lin->encode(a.add(vec[x], vec[y]));
      tables[mul_op][x * n + y] = lin->encode(a.multiply(vec[x], vec[y]));
    }
  }
  tables[neg_op].resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    StructureAlgebra::Vector v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = f.neg(vec[x][i]);
    tables[neg_op][x] = lin->encode(v);
  }
  tables[zero_op] = {0};
  if (one_op) tables[*one_op] = {lin->encode(*a.unit())};
  const auto sigma_inv = sigma.inverse();
  for (std::size_t c = 0; c < q; ++c) {
    auto& t = tables[first_scalar + c];
    t.resize(n);
    const FElem lambda = sigma_inv(static_cast<FElem>(c));
    for (std::size_t x = 0; x < n; ++x) {
      StructureAlgebra::Vector v(d);
      for (std::size_t i = 0; i < d; ++i) v[i] = f.mul(lambda, vec[x][i]);
      t[x] = lin->encode(v);
    }
  }
  return FiniteAlgebra(a.name(), std::move(sig), n, std::move(tables), std::move(lin));
}

StructureAlgebra twist(const StructureAlgebra& a, const FieldAutomorphism& sigma) {
  if (!(*sigma.field() == *a.field())) throw MismatchError("automorphism over " + sigma.field()->name() +
                                                          " applied to an algebra over " + a.field()->name());
  return StructureAlgebra(a.name(), a.field(), a.dim(), a.constants(), a.kind(), a.commutative(), a.unit(),
                          a.twist_exponent() + sigma.exponent(), a.basis());
}

StructureAlgebra opposite(const StructureAlgebra& a) {
  if (!a.associative()) throw InputError("opposite algebra requires an associative algebra: " + a.name());
  const std::size_t d = a.dim();
  std::vector<FElem> c(d * d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) c[(i * d + j) * d + k] = a.constant(j, i, k);
    }
  }
  return StructureAlgebra(a.name(), a.field(), d, std::move(c), a.kind(), a.commutative(), a.unit(),
                          a.twist_exponent(), a.basis());
}

std::optional<FieldAutomorphism> twisted_equivalent(const StructureAlgebra& a1, const StructureAlgebra& a2,
                                                    const Caps& caps) {
  if (!(*a1.field() == *a2.field())) {
    throw MismatchError("algebras over different fields: " + a1.field()->name() + " and " + a2.field()->name());
  }
  const FiniteAlgebra h2 = compile(a2, caps);
  for (const auto& sigma : automorphism_group(a1.field())) {
    if (geometrically_equivalent(compile(twist(a1, sigma), caps), h2, caps).equivalent) return sigma;
  }
  return std::nullopt;
}

std::optional<AlmostWitness> almost_equivalent(const StructureAlgebra& a1, const StructureAlgebra& a2,
                                               const Caps& caps) {
  if (!a1.associative() || !a2.associative()) throw InputError("almost equivalence is defined for associative algebras");
  if (auto s = twisted_equivalent(a1, a2, caps)) return AlmostWitness{*s, false};
  if (auto s = twisted_equivalent(opposite(a1), a2, caps)) return AlmostWitness{*s, true};
  return std::nullopt;
}

std::string format_vector(const StructureAlgebra::Vector& v, std::size_t q) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (q <= 36) {
      out += static_cast<char>(v[i] < 10 ? '0' + v[i] : 'a' + (v[i] - 10));
    } else {
      if (i) out += '.';
      out += std::to_string(v[i]);
    }
  }
  return out;
}

StructureAlgebra::Vector parse_vector(std::string_view s, std::size_t q, std::size_t dim) {
  StructureAlgebra::Vector v;
  if (q <= 36) {
    for (char ch : s) {
      unsigned d;
      if (ch >= '0' && ch <= '9') {
        d = static_cast<unsigned>(ch - '0');
      } else if (ch >= 'a' && ch <= 'z') {
        d = static_cast<unsigned>(ch - 'a') + 10;
      } else {
        throw InputError("bad digit '" + std::string(1, ch) + "' in vector " + std::string(s));
      }
      if (d >= q) throw InputError("digit out of range in vector " + std::string(s));
      v.push_back(d);
    }
  } else {
    std::size_t start = 0;
    while (start <= s.size()) {
      auto dot = s.find('.', start);
      auto part = s.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
      auto d = detail::parse_uint(part);
      if (!d || *d >= q) throw InputError("bad coordinate in vector " + std::string(s));
      v.push_back(static_cast<FElem>(*d));
      if (dot == std::string_view::npos) break;
      start = dot + 1;
    }
  }
  if (v.size() != dim) {
    throw InputError("vector " + std::string(s) + " has " + std::to_string(v.size()) + " coordinates, expected " +
                     std::to_string(dim));
  }
  return v;
}

StructureAlgebra parse_palgebra(std::string_view text) {
  const auto lines = detail::split_lines(text);
  std::vector<std::pair<std::vector<std::string>, std::size_t>> rows;  // words, line number
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto words = detail::split_words(detail::strip_comment(lines[i]));
    if (!words.empty()) rows.emplace_back(std::move(words), i + 1);
  }
  if (rows.empty()) throw ParseError("empty structure algebra file", 1, 1);
  const auto& head = rows[0].first;
  const std::size_t head_line = rows[0].second;
  auto fail = [](const std::string& msg, std::size_t line) -> void { throw ParseError(msg, line, 1); };
  if (head.size() < 6 || head[0] != "palgebra" || head[2] != "field" || head[4] != "dim") {
    fail("expected 'palgebra <name> field <p^k> dim <d> ...'", head_line);
  }
  FieldPtr field;
  try {
    field = FiniteField::parse(head[3]);
  } catch (const Error& e) {
    fail(e.what(), head_line);
  }
  auto dim = detail::parse_uint(head[5]);
  if (!dim || *dim == 0) fail("dimension must be a positive integer", head_line);
  const std::size_t d = *dim;

  auto kind = StructureAlgebra::Kind::Plain;
  bool comm = false;
  std::optional<std::string> unit_text;
  unsigned tw = 0;
  for (std::size_t i = 6; i < head.size(); ++i) {
    const auto& w = head[i];
    if (w == "assoc") {
      kind = StructureAlgebra::Kind::Associative;
    } else if (w == "lie") {
      kind = StructureAlgebra::Kind::Lie;
    } else if (w == "comm") {
      comm = true;
    } else if (w == "unital" && i + 1 < head.size()) {
      unit_text = head[++i];
    } else if (w == "twist" && i + 1 < head.size()) {
      auto e = detail::parse_uint(head[++i]);
      if (!e) fail("twist exponent must be a nonnegative integer", head_line);
      tw = static_cast<unsigned>(*e);
    } else {
      fail("unknown header word '" + w + "'", head_line);
    }
  }

  std::size_t r = 1;
  std::vector<std::string> basis;
  if (r < rows.size() && rows[r].first[0] == "basis") {
    basis.assign(rows[r].first.begin() + 1, rows[r].first.end());
    if (basis.size() != d) fail("expected " + std::to_string(d) + " basis labels", rows[r].second);
    ++r;
  }
  if (rows.size() - r != d * d) {
    fail("expected " + std::to_string(d * d) + " constant rows, found " + std::to_string(rows.size() - r),
         r < rows.size() ? rows[r].second : rows.back().second);
  }
  std::vector<FElem> constants;
  for (; r < rows.size(); ++r) {
    const auto& [words, line] = rows[r];
    if (words.size() != d) fail("expected " + std::to_string(d) + " field elements per row", line);
    for (const auto& w : words) {
      auto c = detail::parse_uint(w);
      if (!c || *c >= field->order()) fail("'" + w + "' is not an element of " + field->name(), line);
      constants.push_back(static_cast<FElem>(*c));
    }
  }
  try {
    std::optional<StructureAlgebra::Vector> unit;
    if (unit_text) unit = parse_vector(*unit_text, field->order(), d);
    return StructureAlgebra(head[1], field, d, std::move(constants), kind, comm, std::move(unit), tw,
                            std::move(basis));
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError(e.what(), head_line, 1);
  }
}

StructureAlgebra load_palgebra_file(const std::string& path) { return parse_palgebra(detail::read_file(path)); }

std::string print_palgebra(const StructureAlgebra& a) {
  std::ostringstream out;
  const FiniteField& f = *a.field();
  out << "palgebra " << a.name() << " field " << f.characteristic() << '^' << f.degree() << " dim " << a.dim();
  if (a.kind() != StructureAlgebra::Kind::Plain) out << ' ' << kind_word(a.kind());
  if (a.commutative()) out << " comm";
  if (a.unit()) out << " unital " << format_vector(*a.unit(), f.order());
  if (a.twist_exponent() != 0) out << " twist " << a.twist_exponent();
  out << '\n';
  if (a.basis() != default_basis(a.dim())) {
    out << "basis";
    for (const auto& b : a.basis()) out << ' ' << b;
    out << '\n';
  }
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) out << a.constant(i, j, k) << (k + 1 == d ? '\n' : ' ');
    }
  }
  return out.str();
}

}  // namespace uag
