#include "uag/window.hpp"

#include <cstring>
#include <limits>
#include <unordered_set>

#include "uag/error.hpp"

namespace uag {

TermWindow::TermWindow(std::vector<FiniteAlgebra> algebras, std::size_t num_vars, std::size_t max_depth,
                       const Caps& caps, std::size_t max_terms)
    : algebras_(std::move(algebras)), num_vars_(num_vars), max_depth_(max_depth) {
  if (algebras_.empty()) throw InputError("term window needs at least one algebra");
  for (std::size_t a = 1; a < algebras_.size(); ++a) require_same_signature(algebras_[0], algebras_[a]);
  for (const auto& h : algebras_) {
    spaces_.push_back(PointSpace{h.size(), num_vars});
    offsets_.push_back(stride_);
    stride_ += spaces_.back().count(caps.assignments);
  }
  const Signature& sig = algebras_[0].signature();
  std::unordered_set<std::string> seen;
  std::vector<Elem> buf(stride_);

  auto add = [&](const Term& t) {
    std::string key(reinterpret_cast<const char*>(buf.data()), buf.size() * sizeof(Elem));
    if (!seen.insert(std::move(key)).second) return;
    if (terms_.size() >= max_terms) {
      throw CapExceeded("term window classes", std::numeric_limits<std::size_t>::max(), max_terms);
    }
    terms_.push_back(t);
    data_.insert(data_.end(), buf.begin(), buf.end());
  };

  for (std::size_t v = 0; v < num_vars; ++v) {
    for (std::size_t a = 0; a < algebras_.size(); ++a) {
      auto vals = term_values(Term::var(v), algebras_[a], num_vars);
      std::copy(vals.begin(), vals.end(), buf.begin() + static_cast<std::ptrdiff_t>(offsets_[a]));
    }
    add(Term::var(v));
  }
  for (std::size_t s = 0; s < sig.size(); ++s) {
    if (sig[s].arity != 0) continue;
    for (std::size_t a = 0; a < algebras_.size(); ++a) {
      const std::size_t n = spaces_[a].count();
      std::fill_n(buf.begin() + static_cast<std::ptrdiff_t>(offsets_[a]), n, algebras_[a].constant(s));
    }
    add(Term::app(s));
  }

  std::size_t prev_begin = 0;
  std::vector<Elem> args;
  for (std::size_t d = 1; d <= max_depth; ++d) {
    const std::size_t prev_end = terms_.size();
    for (std::size_t s = 0; s < sig.size(); ++s) {
      const std::size_t ar = sig[s].arity;
      if (ar == 0 || prev_end == 0) continue;
      std::vector<std::size_t> idx(ar, 0);
      args.resize(ar);
      bool finished = false;
      while (!finished) {
        bool fresh = false;
        for (auto i : idx) fresh = fresh || i >= prev_begin;
        if (fresh) {
          for (std::size_t a = 0; a < algebras_.size(); ++a) {
            const std::size_t n = spaces_[a].count();
            const std::size_t off = offsets_[a];
            for (std::size_t p = 0; p < n; ++p) {
              for (std::size_t i = 0; i < ar; ++i) args[i] = data_[idx[i] * stride_ + off + p];
              buf[off + p] = algebras_[a].apply(s, args.data());
            }
          }
          std::vector<Term> targs;
          targs.reserve(ar);
          for (auto i : idx) targs.push_back(terms_[i]);
          add(Term::app(s, std::move(targs)));
        }
        std::size_t pos = ar;
        while (true) {
          if (pos == 0) {
            finished = true;
            break;
          }
          --pos;
          if (++idx[pos] < prev_end) break;
          idx[pos] = 0;
        }
      }
    }
    prev_begin = prev_end;
    if (terms_.size() == prev_end) break;
  }
}

Mask TermWindow::agreement(std::size_t i, std::size_t j, std::size_t a) const {
  const std::size_t n = spaces_[a].count();
  Mask m(n);
  const Elem* x = values(i, a);
  const Elem* y = values(j, a);
  for (std::size_t p = 0; p < n; ++p) {
    if (x[p] == y[p]) m.set(p);
  }
  return m;
}

}  // namespace uag
