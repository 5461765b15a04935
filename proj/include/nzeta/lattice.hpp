#pragma once

// Exact geometry over the integer lattice: hulls, saturated frames,
// normalized volumes, Minkowski sums and mixed volumes.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "nzeta/integer.hpp"

namespace nzeta {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Origin plus a basis of the saturated lattice of an affine subspace.
///
/// The saturated lattice is Z^n intersected with the direction space; every
/// lattice point of the direction space is an integer combination of basis().
class AffineLatticeFrame {
 public:
  /// Frame of the affine hull of origin + span(directions).
  static AffineLatticeFrame from_directions(Point origin, std::span<const Point> directions);

  const Point& origin() const { return origin_; }
  const std::vector<Point>& basis() const { return basis_; }
  std::size_t ambient_dim() const { return origin_.size(); }
  std::size_t dim() const { return basis_.size(); }

  /// Integer coordinates of x - origin in basis(); throws DimensionError if
  /// x is outside the affine hull.
  Point coordinates(const Point& x) const;

  /// Integer coordinates of a direction vector (no origin shift).
  Point direction_coordinates(const Point& v) const;

 private:
  Point origin_;
  std::vector<Point> basis_;
  // Columns 0..dim-1 give basis coordinates; the remaining columns vanish
  // exactly on the direction space.
  std::vector<Point> coordinate_map_;
};

/// A lattice polytope stored by its vertex set (sorted lexicographically).
class LatticePolytope {
 public:
  LatticePolytope() = default;

  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t affine_dim() const { return affine_dim_; }
  bool is_point() const { return vertices_.size() == 1; }

  friend bool operator==(const LatticePolytope&, const LatticePolytope&) = default;

 private:
  friend LatticePolytope convex_hull(std::span<const Point> points, std::size_t dim);
  std::size_t ambient_dim_ = 0;
  std::size_t affine_dim_ = 0;
  std::vector<Point> vertices_;
};

LatticePolytope convex_hull(std::span<const Point> points, std::size_t dim);

inline LatticePolytope convex_hull(std::initializer_list<Point> points, std::size_t dim) {
  return convex_hull(std::span<const Point>(points.begin(), points.size()), dim);
}

/// Saturated frame of the affine hull; origin is the first vertex.
AffineLatticeFrame affine_frame(const LatticePolytope& p);

/// Normalized volume in the polytope's own saturated frame. With
/// measure_dim given, returns 0 when it exceeds affine_dim() and throws
/// DimensionError when it is smaller.
Rational lattice_volume(const LatticePolytope& p, std::optional<std::size_t> measure_dim = std::nullopt);

LatticePolytope minkowski_sum(const LatticePolytope& a, const LatticePolytope& b);

/// k * p for an integer k >= 0 (k = 0 gives the origin).
LatticePolytope dilate(const LatticePolytope& p, const Integer& k);

LatticePolytope translate(const LatticePolytope& p, const Point& v);

/// Mixed volume V_m(bodies) by interpolating lattice_volume of Minkowski
/// combinations. bodies.size() must equal m; m = 0 gives 1. Bodies spanning
/// more than m dimensions jointly raise DimensionError.
Rational mixed_volume(std::span<const LatticePolytope> bodies, std::size_t m);

/// V_m(A,..,A,B,..,B) with s copies of A, for s = 0..m, from a single
/// interpolation of lattice_volume(lambda*A + B).
std::vector<Rational> mixed_volume_profile(const LatticePolytope& a, const LatticePolytope& b, std::size_t m);

/// Inclusion-exclusion over subset sums; same contract as mixed_volume.
Rational mixed_volume_oracle(std::span<const LatticePolytope> bodies, std::size_t m);

/// v divided by the gcd of its entries (direction preserved).
Point primitive_covector(const Point& v);

}  // namespace nzeta
