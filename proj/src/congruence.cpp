#include "uag/congruence.hpp"

#include "uag/error.hpp"
#include "uag/geometry.hpp"

namespace uag {

struct CongruenceOracle::Impl {
  Kind kind;
  std::size_t vars;
  std::string label;
  // KernelOf / KernelOfSet / ClosureOfSystem
  std::shared_ptr<const FiniteAlgebra> algebra;
  PointSet points;
  std::vector<Point> point_list;
  // Preimage
  TermMap map;
  std::shared_ptr<const Impl> inner;

  bool decide(const Term& a, const Term& b) const {
    if (a.var_bound() > vars || b.var_bound() > vars) {
      throw MismatchError("term uses a variable outside the congruence's variable set");
    }
    if (kind == Kind::Preimage) return inner->decide(map(a), map(b));
    if (a == b) return true;
    for (const auto& p : point_list) {
      if (eval_term(a, p, *algebra) != eval_term(b, p, *algebra)) return false;
    }
    return true;
  }
};

CongruenceOracle CongruenceOracle::kernel_of(const Point& p, const FiniteAlgebra& h) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::KernelOf;
  impl->vars = p.size();
  impl->label = "kernel of a point";
  impl->algebra = std::make_shared<const FiniteAlgebra>(h);
  PointSpace space{h.size(), p.size()};
  impl->points = PointSet::from_points(space, {p});
  impl->point_list = {p};
  return CongruenceOracle(std::move(impl));
}

CongruenceOracle CongruenceOracle::kernel_of_set(const PointSet& a, const FiniteAlgebra& h) {
  if (a.space().carrier != h.size()) throw MismatchError("point set over a different algebra");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::KernelOfSet;
  impl->vars = a.space().vars;
  impl->label = "kernel of a point set";
  impl->algebra = std::make_shared<const FiniteAlgebra>(h);
  impl->points = a;
  impl->point_list = a.points();
  return CongruenceOracle(std::move(impl));
}

CongruenceOracle CongruenceOracle::closure_of_system(const EquationSystem& t, const FiniteAlgebra& h,
                                                     const Caps& caps) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::ClosureOfSystem;
  impl->vars = t.num_vars();
  impl->label = "closure of a system";
  impl->algebra = std::make_shared<const FiniteAlgebra>(h);
  impl->points = solution_set(t, h, caps).points;
  impl->point_list = impl->points.points();
  return CongruenceOracle(std::move(impl));
}

CongruenceOracle CongruenceOracle::preimage(TermMap map, std::size_t source_vars, CongruenceOracle inner,
                                            std::string label) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Preimage;
  impl->vars = source_vars;
  impl->label = std::move(label);
  impl->map = std::move(map);
  impl->inner = inner.impl_;
  return CongruenceOracle(std::move(impl));
}

bool CongruenceOracle::decide(const Term& w, const Term& w2) const { return impl_->decide(w, w2); }
std::size_t CongruenceOracle::num_vars() const { return impl_->vars; }
CongruenceOracle::Kind CongruenceOracle::kind() const { return impl_->kind; }
std::string CongruenceOracle::describe() const { return impl_->label; }

const PointSet* CongruenceOracle::points() const {
  return impl_->kind == Kind::Preimage ? nullptr : &impl_->points;
}

}  // namespace uag
