#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <vector>

#include "uag/algebra.hpp"
#include "uag/config.hpp"

namespace uag {

using Point = std::vector<Elem>;
using Mask = boost::dynamic_bitset<>;

/// Shape of the affine space H^X: carrier size and number of variables.
/// Points are indexed lexicographically, first variable most significant.
struct PointSpace {
  std::size_t carrier = 0;
  std::size_t vars = 0;

  /// |H|^|X|; throws CapExceeded when above `cap`.
  std::size_t count(std::size_t cap) const;
  std::size_t count() const;
  std::size_t index(const Point& p) const;
  Point point(std::size_t index) const;

  friend bool operator==(const PointSpace&, const PointSpace&) = default;
};

/// A set of points of H^X, stored as a membership mask in point-index order.
class PointSet {
 public:
  PointSet() = default;
  PointSet(PointSpace space, Mask mask);
  static PointSet empty(PointSpace space);
  static PointSet full(PointSpace space);
  static PointSet from_points(PointSpace space, const std::vector<Point>& points);

  const PointSpace& space() const noexcept { return space_; }
  const Mask& mask() const noexcept { return mask_; }
  std::size_t size() const { return mask_.count(); }
  bool contains(const Point& p) const { return mask_.test(space_.index(p)); }
  bool contains_index(std::size_t i) const { return mask_.test(i); }
  bool subset_of(const PointSet& other) const;
  /// Points in lexicographic order.
  std::vector<Point> points() const;
  std::vector<std::size_t> indices() const;

  PointSet intersect(const PointSet& other) const;
  PointSet unite(const PointSet& other) const;

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.space_ == b.space_ && a.mask_ == b.mask_;
  }
  friend bool operator!=(const PointSet& a, const PointSet& b) { return !(a == b); }

 private:
  void require_same_space(const PointSet& other) const;
  PointSpace space_;
  Mask mask_;
};

/// All |H|^k points, lexicographically. Throws CapExceeded past caps.assignments.
PointSet enumerate_points(std::size_t num_vars, const FiniteAlgebra& h, const Caps& caps = {});

}  // namespace uag
