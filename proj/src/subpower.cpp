#include "uag/subpower.hpp"

#include <cmath>
#include <cstring>

#include "uag/error.hpp"

namespace uag {

namespace {

std::string key_of(const Elem* t, std::size_t m) {
  return std::string(reinterpret_cast<const char*>(t), m * sizeof(Elem));
}

/// Odometer over the box lo <= idx < hi, last position fastest; false after the last tuple.
bool advance(std::vector<std::size_t>& idx, const std::vector<std::size_t>& lo, const std::vector<std::size_t>& hi) {
  for (std::size_t pos = idx.size(); pos-- > 0;) {
    if (++idx[pos] < hi[pos]) return true;
    idx[pos] = lo[pos];
  }
  return false;
}

}  // namespace

std::optional<std::size_t> ExplicitSubpower::lookup(const Elem* t) const {
  if (numeric_keys_) {
    std::uint64_t key = 0;
    for (std::size_t c = 0; c < m_; ++c) key = key * radix_ + t[c];
    auto it = numeric_index_.find(key);
    if (it == numeric_index_.end()) return std::nullopt;
    return it->second;
  }
  auto it = index_.find(key_of(t, m_));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool ExplicitSubpower::insert(const Elem* t, bool generator, std::size_t index, const std::vector<std::size_t>& args,
                              std::size_t cap, const Observer& observer) {
  if (lookup(t)) return true;
  if (witnesses_.size() >= cap) {
    throw CapExceeded("subpower generation", witnesses_.size() + 1, cap);
  }
  const std::size_t id = witnesses_.size();
  if (numeric_keys_) {
    std::uint64_t key = 0;
    for (std::size_t c = 0; c < m_; ++c) key = key * radix_ + t[c];
    numeric_index_.emplace(key, id);
  } else {
    index_.emplace(key_of(t, m_), id);
  }
  data_.insert(data_.end(), t, t + m_);
  witnesses_.push_back(Witness{generator, index, args});
  if (observer && !observer(id, data_.data() + id * m_)) {
    stopped_ = true;
    return false;
  }
  return true;
}

ExplicitSubpower::ExplicitSubpower(const FiniteAlgebra& h, std::size_t m,
                                   const std::vector<std::vector<Elem>>& generators, std::size_t cap,
                                   const Observer& observer)
    : m_(m), radix_(h.size()), numeric_keys_(false) {
  {
    // Tuples get a mixed-radix integer key when |H|^m fits in 64 bits.
    long double bits = 0;
    for (std::size_t c = 0; c < m; ++c) bits += std::log2(static_cast<long double>(radix_));
    numeric_keys_ = bits < 63;
  }
  const Signature& sig = h.signature();
  std::vector<Elem> buf(m);
  for (std::size_t op = 0; op < sig.size(); ++op) {
    if (sig[op].arity != 0) continue;
    std::fill(buf.begin(), buf.end(), h.constant(op));
    if (!insert(buf.data(), false, op, {}, cap, observer)) return;
  }
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (generators[g].size() != m) throw MismatchError("generator tuple has wrong length");
    if (!insert(generators[g].data(), true, g, {}, cap, observer)) return;
  }
  std::size_t done = 0;
  std::vector<Elem> args;
  while (done < size()) {
    const std::size_t end = size();
    for (std::size_t op = 0; op < sig.size(); ++op) {
      const std::size_t ar = sig[op].arity;
      if (ar == 0) continue;
      // Tuples with at least one new element: the first new one sits at
      // position p, earlier positions range over old elements only.
      for (std::size_t p = 0; p < ar; ++p) {
        if (done == 0 && p > 0) break;
        std::vector<std::size_t> lo(ar, 0), hi(ar, end);
        for (std::size_t i = 0; i < p; ++i) hi[i] = done;
        lo[p] = done;
        std::vector<std::size_t> idx = lo;
        args.resize(ar);
        while (true) {
          for (std::size_t c = 0; c < m; ++c) {
            for (std::size_t i = 0; i < ar; ++i) args[i] = data_[idx[i] * m + c];
            buf[c] = h.apply(op, args.data());
          }
          if (!insert(buf.data(), false, op, idx, cap, observer)) return;
          if (!advance(idx, lo, hi)) break;
        }
      }
    }
    done = end;
  }
}

std::optional<std::size_t> ExplicitSubpower::find(const std::vector<Elem>& t) const {
  if (t.size() != m_) return std::nullopt;
  return lookup(t.data());
}

Term ExplicitSubpower::term(std::size_t i, const std::vector<Term>& generator_terms) const {
  std::vector<std::optional<Term>> memo(i + 1);
  std::function<Term(std::size_t)> build = [&](std::size_t j) -> Term {
    if (memo[j]) return *memo[j];
    const Witness& w = witnesses_[j];
    Term t = Term::var(0);
    if (w.generator) {
      t = generator_terms.at(w.index);
    } else {
      std::vector<Term> args;
      for (auto a : w.args) args.push_back(build(a));
      t = Term::app(w.index, std::move(args));
    }
    memo[j] = t;
    return t;
  };
  return build(i);
}

LinearSubpower::LinearSubpower(const FiniteAlgebra& h, std::size_t m, const std::vector<std::vector<Elem>>& generators)
    : h_(h), lin_(h.linear()), m_(m), span_(h.linear() ? h.linear()->field : nullptr, h.linear() ? h.linear()->dim * m : 0) {
  if (!lin_) throw MismatchError("linear subpower requires an algebra with linear structure");
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (generators[g].size() != m) throw MismatchError("generator tuple has wrong length");
    if (span_.add(to_vector(generators[g]))) witnesses_.push_back({Witness::Generator, g, 0});
  }
  if (lin_->one_op) {
    std::vector<Elem> unit(m, h_.constant(*lin_->one_op));
    if (span_.add(to_vector(unit))) witnesses_.push_back({Witness::Unit, 0, 0});
  }
  for (std::size_t n = 0; n < span_.rank(); ++n) {
    for (std::size_t i = 0; i <= n; ++i) {
      // raw() may grow inside the loop; take copies of the operands.
      FVec a = span_.raw()[i];
      FVec b = span_.raw()[n];
      if (span_.add(multiply(a, b))) witnesses_.push_back({Witness::Product, i, n});
      if (i != n && span_.add(multiply(b, a))) witnesses_.push_back({Witness::Product, n, i});
    }
  }
}

FVec LinearSubpower::to_vector(const std::vector<Elem>& t) const {
  const std::size_t d = lin_->dim;
  const std::size_t q = lin_->field->order();
  FVec v(d * t.size());
  for (std::size_t j = 0; j < t.size(); ++j) {
    Elem e = t[j];
    for (std::size_t i = 0; i < d; ++i) {
      v[j * d + i] = static_cast<std::uint8_t>(e % q);
      e = static_cast<Elem>(e / q);
    }
  }
  return v;
}

std::vector<Elem> LinearSubpower::to_tuple(const FVec& v) const {
  const std::size_t d = lin_->dim;
  const std::size_t q = lin_->field->order();
  std::vector<Elem> t(v.size() / d);
  for (std::size_t j = 0; j < t.size(); ++j) {
    Elem e = 0;
    for (std::size_t i = d; i-- > 0;) e = static_cast<Elem>(e * q + v[j * d + i]);
    t[j] = e;
  }
  return t;
}

std::vector<std::size_t> LinearSubpower::digit_columns(const std::vector<std::size_t>& coords) const {
  std::vector<std::size_t> cols;
  const std::size_t d = lin_->dim;
  for (auto c : coords) {
    for (std::size_t i = 0; i < d; ++i) cols.push_back(c * d + i);
  }
  return cols;
}

FVec LinearSubpower::multiply(const FVec& a, const FVec& b) const {
  auto ta = to_tuple(a);
  auto tb = to_tuple(b);
  std::vector<Elem> out(ta.size());
  Elem args[2];
  for (std::size_t j = 0; j < ta.size(); ++j) {
    args[0] = ta[j];
    args[1] = tb[j];
    out[j] = h_.apply(lin_->mul_op, args);
  }
  return to_vector(out);
}

Term LinearSubpower::raw_term(std::size_t i, const std::vector<Term>& generator_terms) const {
  std::vector<std::optional<Term>> memo(witnesses_.size());
  std::function<Term(std::size_t)> build = [&](std::size_t j) -> Term {
    if (memo[j]) return *memo[j];
    const Witness& w = witnesses_[j];
    Term t = Term::var(0);
    switch (w.kind) {
      case Witness::Generator: t = generator_terms.at(w.a); break;
      case Witness::Unit: t = Term::app(*lin_->one_op); break;
      case Witness::Product: t = Term::app(lin_->mul_op, {build(w.a), build(w.b)}); break;
    }
    memo[j] = t;
    return t;
  };
  return build(i);
}

Term LinearSubpower::combination_term(const FVec& coeffs, const std::vector<Term>& generator_terms) const {
  std::optional<Term> acc;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    Term t = raw_term(i, generator_terms);
    if (coeffs[i] != 1) t = Term::app(lin_->scalar_op_of.at(coeffs[i]), {t});
    acc = acc ? Term::app(lin_->add_op, {*acc, t}) : t;
  }
  return acc ? *acc : Term::app(lin_->zero_op);
}

FactoringResult factoring_test(const FiniteAlgebra& h, const std::vector<Point>& a, const Point& mu,
                               const Caps& caps) {
  const std::size_t k = mu.size();
  const std::size_t m = a.size() + 1;
  std::vector<std::vector<Elem>> rows(k, std::vector<Elem>(m));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[j].size() != k) throw MismatchError("points of different arity");
      rows[i][j] = a[j][i];
    }
    rows[i][m - 1] = mu[i];
  }
  std::vector<Term> gens;
  for (std::size_t i = 0; i < k; ++i) gens.push_back(Term::var(i));
  FactoringResult result;

  if (h.linear()) {
    LinearSubpower s(h, m, rows);
    result.generated = s.dimension();
    std::vector<std::size_t> first(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) first[j] = j;
    auto kernel = restricted_kernel(s.span().field(), s.span().raw(), s.digit_columns(first));
    result.member = kernel.empty();
    if (!result.member) {
      const auto& lin = *h.linear();
      result.witness = std::make_pair(s.combination_term(kernel.front(), gens), Term::app(lin.zero_op));
    }
    return result;
  }

  std::unordered_map<std::string, std::size_t> seen;
  std::optional<std::pair<std::size_t, std::size_t>> clash;
  auto observer = [&](std::size_t idx, const Elem* t) {
    std::string key(reinterpret_cast<const char*>(t), (m - 1) * sizeof(Elem));
    auto [it, inserted] = seen.emplace(std::move(key), idx);
    if (!inserted) {
      clash = std::make_pair(idx, it->second);
      return false;
    }
    return true;
  };
  ExplicitSubpower built(h, m, rows, caps.subpower_elements, observer);
  result.generated = built.size();
  result.member = !clash.has_value();
  if (clash) result.witness = std::make_pair(built.term(clash->first, gens), built.term(clash->second, gens));
  return result;
}

ClosureEngine::ClosureEngine(const FiniteAlgebra& h, std::size_t num_vars, const Caps& caps)
    : space_{h.size(), num_vars}, h_(h) {
  const std::size_t n = space_.count(caps.assignments);
  if (n > caps.subpower_elements) throw CapExceeded("closure engine points |H|^|X|", n, caps.subpower_elements);
  std::vector<std::vector<Elem>> rows(num_vars, std::vector<Elem>(n));
  for (std::size_t p = 0; p < n; ++p) {
    Point pt = space_.point(p);
    for (std::size_t i = 0; i < num_vars; ++i) rows[i][p] = pt[i];
  }
  for (std::size_t i = 0; i < num_vars; ++i) var_terms_.push_back(Term::var(i));
  if (h.linear()) {
    linear_ = std::make_unique<LinearSubpower>(h, n, rows);
  } else {
    explicit_ = std::make_unique<ExplicitSubpower>(h, n, rows, caps.subpower_elements);
  }
}

std::size_t ClosureEngine::clone_measure() const { return linear_ ? linear_->dimension() : explicit_->size(); }

Mask ClosureEngine::closure(const Mask& a) const {
  const std::size_t n = space_.count();
  if (a.size() != n) throw MismatchError("mask size does not match the engine's point space");
  Mask result(n);
  result.set();
  if (linear_) {
    std::vector<std::size_t> coords;
    for (auto i = a.find_first(); i != Mask::npos; i = a.find_next(i)) coords.push_back(i);
    const auto& raw = linear_->span().raw();
    const auto& field = linear_->span().field();
    const std::size_t d = linear_->linear().dim;
    for (const auto& c : restricted_kernel(field, raw, linear_->digit_columns(coords))) {
      FVec v = combine(field, raw, c);
      for (std::size_t p = 0; p < n; ++p) {
        if (!result.test(p)) continue;
        for (std::size_t i = 0; i < d; ++i) {
          if (v[p * d + i]) {
            result.reset(p);
            break;
          }
        }
      }
    }
    return result;
  }
  std::vector<std::size_t> coords;
  for (auto i = a.find_first(); i != Mask::npos; i = a.find_next(i)) coords.push_back(i);
  std::unordered_map<std::string, std::size_t> reps;
  std::string key(coords.size() * sizeof(Elem), '\0');
  for (std::size_t e = 0; e < explicit_->size(); ++e) {
    const Elem* t = explicit_->element(e);
    for (std::size_t j = 0; j < coords.size(); ++j) {
      std::memcpy(&key[j * sizeof(Elem)], &t[coords[j]], sizeof(Elem));
    }
    auto [it, inserted] = reps.emplace(key, e);
    if (inserted) continue;
    const Elem* r = explicit_->element(it->second);
    for (std::size_t p = 0; p < n; ++p) {
      if (t[p] != r[p]) result.reset(p);
    }
  }
  return result;
}

std::optional<Equation> ClosureEngine::separating_equation(const Mask& a, std::size_t mu) const {
  if (mu >= space_.count()) throw MismatchError("point index out of range");
  std::vector<std::size_t> coords;
  for (auto i = a.find_first(); i != Mask::npos; i = a.find_next(i)) coords.push_back(i);
  if (linear_) {
    const auto& raw = linear_->span().raw();
    const auto& field = linear_->span().field();
    const std::size_t d = linear_->linear().dim;
    for (const auto& c : restricted_kernel(field, raw, linear_->digit_columns(coords))) {
      FVec v = combine(field, raw, c);
      for (std::size_t i = 0; i < d; ++i) {
        if (v[mu * d + i]) {
          return Equation{linear_->combination_term(c, var_terms_), Term::app(linear_->linear().zero_op)};
        }
      }
    }
    return std::nullopt;
  }
  std::unordered_map<std::string, std::size_t> reps;
  std::string key(coords.size() * sizeof(Elem), '\0');
  for (std::size_t e = 0; e < explicit_->size(); ++e) {
    const Elem* t = explicit_->element(e);
    for (std::size_t j = 0; j < coords.size(); ++j) {
      std::memcpy(&key[j * sizeof(Elem)], &t[coords[j]], sizeof(Elem));
    }
    auto [it, inserted] = reps.emplace(key, e);
    if (inserted) continue;
    if (t[mu] != explicit_->element(it->second)[mu]) {
      return Equation{explicit_->term(e, var_terms_), explicit_->term(it->second, var_terms_)};
    }
  }
  return std::nullopt;
}

}  // namespace uag
