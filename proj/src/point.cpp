#include "uag/point.hpp"

#include <limits>

#include "uag/error.hpp"

namespace uag {

std::size_t PointSpace::count(std::size_t cap) const {
  std::size_t c = 1;
  for (std::size_t i = 0; i < vars; ++i) {
    if (c > cap / carrier) {
      // Saturating product for the report.
      std::size_t req = c;
      for (std::size_t j = i; j < vars; ++j) {
        req = req > std::numeric_limits<std::size_t>::max() / carrier ? std::numeric_limits<std::size_t>::max()
                                                                      : req * carrier;
      }
      throw CapExceeded("point enumeration |H|^|X|", req, cap);
    }
    c *= carrier;
  }
  if (c > cap) throw CapExceeded("point enumeration |H|^|X|", c, cap);
  return c;
}

std::size_t PointSpace::count() const { return count(std::numeric_limits<std::size_t>::max()); }

std::size_t PointSpace::index(const Point& p) const {
  if (p.size() != vars) throw MismatchError("point has wrong number of coordinates");
  std::size_t idx = 0;
  for (Elem e : p) {
    if (e >= carrier) throw MismatchError("point coordinate out of range");
    idx = idx * carrier + e;
  }
  return idx;
}

Point PointSpace::point(std::size_t index) const {
  Point p(vars);
  for (std::size_t i = vars; i-- > 0;) {
    p[i] = static_cast<Elem>(index % carrier);
    index /= carrier;
  }
  return p;
}

PointSet::PointSet(PointSpace space, Mask mask) : space_(space), mask_(std::move(mask)) {
  if (mask_.size() != space_.count()) throw MismatchError("point mask size does not match the point space");
}

PointSet PointSet::empty(PointSpace space) { return PointSet(space, Mask(space.count())); }

PointSet PointSet::full(PointSpace space) {
  Mask m(space.count());
  m.set();
  return PointSet(space, std::move(m));
}

PointSet PointSet::from_points(PointSpace space, const std::vector<Point>& points) {
  Mask m(space.count());
  for (const auto& p : points) m.set(space.index(p));
  return PointSet(space, std::move(m));
}

void PointSet::require_same_space(const PointSet& other) const {
  if (!(space_ == other.space_)) throw MismatchError("point sets over different spaces");
}

bool PointSet::subset_of(const PointSet& other) const {
  require_same_space(other);
  return mask_.is_subset_of(other.mask_);
}

std::vector<Point> PointSet::points() const {
  std::vector<Point> out;
  out.reserve(size());
  for (auto i = mask_.find_first(); i != Mask::npos; i = mask_.find_next(i)) out.push_back(space_.point(i));
  return out;
}

std::vector<std::size_t> PointSet::indices() const {
  std::vector<std::size_t> out;
  for (auto i = mask_.find_first(); i != Mask::npos; i = mask_.find_next(i)) out.push_back(i);
  return out;
}

PointSet PointSet::intersect(const PointSet& other) const {
  require_same_space(other);
  return PointSet(space_, mask_ & other.mask_);
}

PointSet PointSet::unite(const PointSet& other) const {
  require_same_space(other);
  return PointSet(space_, mask_ | other.mask_);
}

PointSet enumerate_points(std::size_t num_vars, const FiniteAlgebra& h, const Caps& caps) {
  PointSpace space{h.size(), num_vars};
  space.count(caps.assignments);
  return PointSet::full(space);
}

}  // namespace uag
