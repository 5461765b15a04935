#pragma once

// Facet enumeration for full-dimensional rational polyhedra given by
// generators, using the double description method with exact integers.

#include <span>
#include <vector>

#include "nzeta/integer.hpp"

namespace nzeta {

/// The closed halfspace { x : <normal, x> >= offset }; normal is primitive.
struct Halfspace {
  Point normal;
  Integer offset;

  bool contains(std::span<const Integer> x) const { return dot(normal, x) >= offset; }
  bool on_boundary(std::span<const Integer> x) const { return dot(normal, x) == offset; }
  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

/// Facets of conv(points) + cone(rays) in Z^d.
///
/// The polyhedron must be full-dimensional (the caller projects to an
/// affine frame first). Every returned normal is a primitive integer vector
/// pointing into the polyhedron. Result is sorted by (normal, offset).
std::vector<Halfspace> polyhedron_facets(std::span<const Point> points,
                                         std::span<const Point> rays = {});

}  // namespace nzeta
