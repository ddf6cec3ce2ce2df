#include "uag/homomorphism.hpp"

#include <algorithm>
#include <limits>

#include "tuples.hpp"
#include "uag/error.hpp"

namespace uag {

bool is_homomorphism(const ElemMap& f, const FiniteAlgebra& a, const FiniteAlgebra& b) {
  require_same_signature(a, b);
  if (f.size() != a.size()) return false;
  for (Elem v : f) {
    if (v >= b.size()) return false;
  }
  const Signature& sig = a.signature();
  for (std::size_t op = 0; op < sig.size(); ++op) {
    const std::size_t ar = sig[op].arity;
    std::vector<Elem> args(ar, 0), image(ar);
    do {
      for (std::size_t i = 0; i < ar; ++i) image[i] = f[args[i]];
      if (f[a.apply(op, args)] != b.apply(op, image)) return false;
    } while (detail::next_tuple(args, a.size()));
  }
  return true;
}

namespace {

/// Closes `in` under all operations, appending derivations to `steps`.
void close_under_ops(const FiniteAlgebra& a, std::vector<char>& in, std::vector<Elem>& elems,
                     std::vector<GenerationSchedule::Step>& steps) {
  const Signature& sig = a.signature();
  std::size_t done = 0;  // elements [0, done) have been combined among themselves
  while (done < elems.size()) {
    const std::size_t end = elems.size();
    for (std::size_t op = 0; op < sig.size(); ++op) {
      const std::size_t ar = sig[op].arity;
      if (ar == 0) continue;
      // All tuples over [0, end) with at least one index in [done, end).
      std::vector<std::size_t> idx(ar, 0);
      std::vector<Elem> args(ar);
      bool finished = false;
      while (!finished) {
        bool fresh = false;
        for (auto i : idx) fresh = fresh || i >= done;
        if (fresh) {
          for (std::size_t i = 0; i < ar; ++i) args[i] = elems[idx[i]];
          Elem r = a.apply(op, args);
          if (!in[r]) {
            in[r] = 1;
            elems.push_back(r);
            steps.push_back({r, op, args});
          }
        }
        std::size_t pos = ar;
        while (true) {
          if (pos == 0) { finished = true; break; }
          --pos;
          if (++idx[pos] < end) break;
          idx[pos] = 0;
        }
      }
    }
    done = end;
  }
}

}  // namespace

GenerationSchedule generating_schedule(const FiniteAlgebra& a) {
  GenerationSchedule s;
  std::vector<char> in(a.size(), 0);
  std::vector<Elem> elems;
  const Signature& sig = a.signature();
  for (std::size_t op = 0; op < sig.size(); ++op) {
    if (sig[op].arity != 0) continue;
    Elem c = a.constant(op);
    if (!in[c]) {
      in[c] = 1;
      elems.push_back(c);
      s.steps.push_back({c, op, {}});
    }
  }
  close_under_ops(a, in, elems, s.steps);
  for (Elem g = 0; g < a.size(); ++g) {
    if (in[g]) continue;
    in[g] = 1;
    elems.push_back(g);
    s.generators.push_back(g);
    close_under_ops(a, in, elems, s.steps);
  }
  return s;
}

std::vector<ElemMap> enumerate_homs(const FiniteAlgebra& a, const FiniteAlgebra& b, const Caps& caps) {
  require_same_signature(a, b);
  const GenerationSchedule sched = generating_schedule(a);
  const std::size_t g = sched.generators.size();
  std::size_t candidates = 1;
  for (std::size_t i = 0; i < g; ++i) {
    if (candidates > caps.hom_candidates / b.size()) {
      throw CapExceeded("homomorphism candidates |B|^|generators|", std::numeric_limits<std::size_t>::max(),
                        caps.hom_candidates);
    }
    candidates *= b.size();
  }
  if (candidates > caps.hom_candidates) {
    throw CapExceeded("homomorphism candidates |B|^|generators|", candidates, caps.hom_candidates);
  }

  // Steps are ordered so that each derivation only uses constants, generators,
  // and previously derived elements; replay them for each choice of images.
  std::vector<ElemMap> homs;
  std::vector<Elem> choice(g, 0);
  const std::size_t kUnset = std::numeric_limits<Elem>::max();
  while (true) {
    ElemMap f(a.size(), static_cast<Elem>(kUnset));
    for (std::size_t i = 0; i < g; ++i) f[sched.generators[i]] = choice[i];
    std::vector<Elem> image;
    bool ok = true;
    for (const auto& step : sched.steps) {
      image.resize(step.args.size());
      for (std::size_t i = 0; i < step.args.size(); ++i) image[i] = f[step.args[i]];
      if (std::find(image.begin(), image.end(), static_cast<Elem>(kUnset)) != image.end()) {
        ok = false;
        break;
      }
      f[step.element] = b.apply(step.op, image);
    }
    if (ok && std::find(f.begin(), f.end(), static_cast<Elem>(kUnset)) == f.end() && is_homomorphism(f, a, b)) {
      homs.push_back(f);
    }
    if (!detail::next_tuple(choice, b.size())) break;
  }
  std::sort(homs.begin(), homs.end());
  homs.erase(std::unique(homs.begin(), homs.end()), homs.end());
  return homs;
}

}  // namespace uag
