#include "uag/algebra.hpp"

#include <sstream>

#include "text_util.hpp"
#include "uag/error.hpp"

namespace uag {

std::vector<FiniteField::Elem> LinearStructure::digits(Elem e) const {
  std::vector<FiniteField::Elem> d(dim);
  const std::size_t q = field->order();
  for (std::size_t i = 0; i < dim; ++i) {
    d[i] = static_cast<FiniteField::Elem>(e % q);
    e = static_cast<Elem>(e / q);
  }
  return d;
}

Elem LinearStructure::encode(const std::vector<FiniteField::Elem>& d) const {
  Elem e = 0;
  const std::size_t q = field->order();
  for (std::size_t i = dim; i-- > 0;) e = static_cast<Elem>(e * q + d[i]);
  return e;
}

FiniteAlgebra::FiniteAlgebra(std::string name, SignaturePtr sig, std::size_t size,
                             std::vector<std::vector<Elem>> tables, std::shared_ptr<const LinearStructure> linear)
    : name_(std::move(name)),
      sig_(std::move(sig)),
      size_(size),
      tables_(std::make_shared<const std::vector<std::vector<Elem>>>(std::move(tables))),
      linear_(std::move(linear)) {
  if (!sig_) throw InputError("algebra without signature");
  if (size_ == 0) throw InputError("algebra '" + name_ + "' must have positive size");
  if (tables_->size() != sig_->size()) throw InputError("algebra '" + name_ + "': table count differs from signature");
  for (std::size_t op = 0; op < sig_->size(); ++op) {
    std::size_t expected = 1;
    for (std::size_t i = 0; i < (*sig_)[op].arity; ++i) expected *= size_;
    if ((*tables_)[op].size() != expected) {
      throw InputError("algebra '" + name_ + "': table for '" + (*sig_)[op].name + "' has " +
                       std::to_string((*tables_)[op].size()) + " entries, expected " + std::to_string(expected));
    }
    for (Elem v : (*tables_)[op]) {
      if (v >= size_) {
        throw InputError("algebra '" + name_ + "': table for '" + (*sig_)[op].name + "' has out-of-range value " +
                         std::to_string(v));
      }
    }
  }
}

FiniteAlgebra FiniteAlgebra::renamed(std::string name) const {
  FiniteAlgebra copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

bool FiniteAlgebra::same_tables(const FiniteAlgebra& other) const {
  return *sig_ == *other.sig_ && size_ == other.size_ && *tables_ == *other.tables_;
}

void require_same_signature(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (!(a.signature() == b.signature())) {
    throw MismatchError("algebras '" + a.name() + "' and '" + b.name() + "' have different signatures");
  }
}

FiniteAlgebra product(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  require_same_signature(a, b);
  const std::size_t na = a.size(), nb = b.size(), n = na * nb;
  const Signature& sig = a.signature();
  std::vector<std::vector<Elem>> tables(sig.size());
  for (std::size_t op = 0; op < sig.size(); ++op) {
    const std::size_t ar = sig[op].arity;
    std::size_t count = 1;
    for (std::size_t i = 0; i < ar; ++i) count *= n;
    tables[op].resize(count);
    std::vector<Elem> args(ar), xa(ar), xb(ar);
    for (std::size_t idx = 0; idx < count; ++idx) {
      std::size_t r = idx;
      for (std::size_t i = ar; i-- > 0;) {
        args[i] = static_cast<Elem>(r % n);
        r /= n;
      }
      for (std::size_t i = 0; i < ar; ++i) {
        xa[i] = static_cast<Elem>(args[i] % na);
        xb[i] = static_cast<Elem>(args[i] / na);
      }
      tables[op][idx] = static_cast<Elem>(a.apply(op, xa) + na * b.apply(op, xb));
    }
  }
  std::shared_ptr<const LinearStructure> lin;
  if (a.linear() && b.linear() && *a.linear()->field == *b.linear()->field) {
    const auto& la = *a.linear();
    const auto& lb = *b.linear();
    if (la.add_op == lb.add_op && la.mul_op == lb.mul_op && la.neg_op == lb.neg_op && la.zero_op == lb.zero_op &&
        la.one_op == lb.one_op && la.scalar_op_of == lb.scalar_op_of) {
      auto l = std::make_shared<LinearStructure>(la);
      l->dim = la.dim + lb.dim;
      lin = l;
    }
  }
  return FiniteAlgebra(a.name() + "x" + b.name(), a.signature_ptr(), n, std::move(tables), lin);
}

Elem eval_term(const Term& t, const std::vector<Elem>& point, const FiniteAlgebra& h) {
  if (t.is_var()) {
    if (t.index() >= point.size()) throw MismatchError("term variable outside the point's variable set");
    return point[t.index()];
  }
  const auto& args = t.args();
  Elem buf[8];
  std::vector<Elem> big;
  Elem* vals = buf;
  if (args.size() > 8) {
    big.resize(args.size());
    vals = big.data();
  }
  for (std::size_t i = 0; i < args.size(); ++i) vals[i] = eval_term(args[i], point, h);
  return h.apply(t.index(), vals);
}

std::vector<Elem> term_values(const Term& t, const FiniteAlgebra& h, std::size_t num_vars) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < num_vars; ++i) count *= h.size();
  std::vector<Elem> out(count);
  if (t.is_var()) {
    if (t.index() >= num_vars) throw MismatchError("term variable outside the variable set");
    std::size_t stride = 1;
    for (std::size_t i = t.index() + 1; i < num_vars; ++i) stride *= h.size();
    for (std::size_t p = 0; p < count; ++p) out[p] = static_cast<Elem>((p / stride) % h.size());
    return out;
  }
  const std::size_t ar = t.args().size();
  std::vector<std::vector<Elem>> sub;
  sub.reserve(ar);
  for (const auto& a : t.args()) sub.push_back(term_values(a, h, num_vars));
  std::vector<Elem> args(ar);
  for (std::size_t p = 0; p < count; ++p) {
    for (std::size_t i = 0; i < ar; ++i) args[i] = sub[i][p];
    out[p] = h.apply(t.index(), args);
  }
  return out;
}

FiniteAlgebra parse_algebra(std::string_view text, const std::string& base_dir) {
  std::istringstream in{std::string(text)};
  std::vector<std::pair<std::string, std::size_t>> words;  // word, line
  {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      for (auto& w : detail::split_words(detail::strip_comment(line))) words.emplace_back(w, line_no);
    }
  }
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> void {
    std::size_t line = pos < words.size() ? words[pos].second : (words.empty() ? 1 : words.back().second);
    throw ParseError(msg, line, 1);
  };
  auto expect_word = [&](const char* w) {
    if (pos >= words.size() || words[pos].first != w) fail(std::string("expected '") + w + "'");
    ++pos;
  };
  auto take = [&]() -> std::string {
    if (pos >= words.size()) fail("unexpected end of file");
    return words[pos++].first;
  };
  expect_word("algebra");
  std::string name = take();
  expect_word("size");
  auto size = detail::parse_uint(take());
  if (!size || *size == 0) fail("size must be a positive integer");
  expect_word("signature");
  std::string sig_path = take();
  std::string full = sig_path;
  if (!sig_path.empty() && sig_path[0] != '/') full = base_dir + "/" + sig_path;
  auto sig = std::make_shared<const Signature>(load_signature_file(full));

  std::vector<std::vector<Elem>> tables(sig->size());
  std::vector<bool> seen(sig->size(), false);
  while (pos < words.size()) {
    expect_word("table");
    std::string op_name = take();
    auto op = sig->find(op_name);
    if (!op) fail("table for unknown symbol '" + op_name + "'");
    if (seen[*op]) fail("duplicate table for '" + op_name + "'");
    seen[*op] = true;
    std::size_t count = 1;
    for (std::size_t i = 0; i < (*sig)[*op].arity; ++i) count *= *size;
    for (std::size_t i = 0; i < count; ++i) {
      auto v = detail::parse_uint(take());
      if (!v) fail("table entry must be a nonnegative integer");
      if (*v >= *size) fail("table entry " + std::to_string(*v) + " out of range");
      tables[*op].push_back(static_cast<Elem>(*v));
    }
  }
  for (std::size_t op = 0; op < sig->size(); ++op) {
    if (!seen[op]) fail("missing table for '" + (*sig)[op].name + "'");
  }
  return FiniteAlgebra(name, sig, *size, std::move(tables));
}

FiniteAlgebra load_algebra_file(const std::string& path) {
  return parse_algebra(detail::read_file(path), detail::directory_of(path));
}

std::string print_algebra(const FiniteAlgebra& h, const std::string& sig_file) {
  std::ostringstream out;
  out << "algebra " << h.name() << " size " << h.size() << " signature " << sig_file << '\n';
  const Signature& sig = h.signature();
  for (std::size_t op = 0; op < sig.size(); ++op) {
    out << "table " << sig[op].name << '\n';
    const auto& t = h.table(op);
    const std::size_t row = sig[op].arity == 0 ? 1 : h.size();
    for (std::size_t i = 0; i < t.size(); ++i) {
      out << t[i] << ((i + 1) % row == 0 ? '\n' : ' ');
    }
  }
  return out.str();
}

}  // namespace uag
