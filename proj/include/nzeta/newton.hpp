#pragma once

// Newton diagrams, their restrictions to coordinate subspaces, support
// functions and faces, and the essential covector sets E_I.

#include <optional>
#include <string>
#include <vector>

#include "nzeta/integer.hpp"
#include "nzeta/lattice.hpp"
#include "nzeta/support.hpp"

namespace nzeta {

/// Newton diagram of a germ, carried by its support. Non-degeneracy of the
/// underlying coefficients is never checked.
class NewtonDiagram {
 public:
  explicit NewtonDiagram(GermSupport support);

  const GermSupport& support() const { return support_; }
  const std::vector<Point>& points() const { return support_.points(); }
  std::size_t ambient_dim() const { return support_.ambient_dim(); }
  /// Convex hull of the support points.
  const LatticePolytope& hull() const { return hull_; }

 private:
  GermSupport support_;
  LatticePolytope hull_;
};

/// (numerator diagram, denominator diagram).
class NewtonPair {
 public:
  NewtonPair(NewtonDiagram gamma1, NewtonDiagram gamma2);

  const NewtonDiagram& gamma1() const { return gamma1_; }
  const NewtonDiagram& gamma2() const { return gamma2_; }
  std::size_t ambient_dim() const { return gamma1_.ambient_dim(); }
  NewtonPair swapped() const { return NewtonPair(gamma2_, gamma1_); }

 private:
  NewtonDiagram gamma1_;
  NewtonDiagram gamma2_;
};

/// A non-empty subset I of {0, ..., n}, kept sorted.
class CoordinateSubset {
 public:
  CoordinateSubset(std::vector<std::size_t> indices, std::size_t ambient_dim);

  const std::vector<std::size_t>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  std::size_t ambient_dim() const { return ambient_dim_; }
  bool contains(std::size_t i) const;

  /// Coordinates of p at the indices of I.
  Point project(const Point& p) const;
  /// Inverse of project: zeros off I.
  Point embed(const Point& q) const;

  /// All subsets of size l in lexicographic order.
  static std::vector<CoordinateSubset> all_of_size(std::size_t ambient_dim, std::size_t l);

  friend bool operator==(const CoordinateSubset&, const CoordinateSubset&) = default;

 private:
  std::vector<std::size_t> indices_;
  std::size_t ambient_dim_;
};

/// Element of E_I with everything the zeta formulas need.
///
/// `a` and the faces live in the ambient coordinates (a vanishes off I);
/// `v_a` is the sum over s of V_{l-1}(delta1 x s, delta2 x (l-1-s)).
struct EssentialCovector {
  Point a;
  Integer m1;
  Integer m2;
  LatticePolytope delta1;
  LatticePolytope delta2;
  Rational v_a;
};

/// The diagram cut by L_I, re-indexed into the |I| coordinates of I; empty
/// when no support point lies in L_I.
std::optional<NewtonDiagram> restrict(const NewtonDiagram& d, const CoordinateSubset& subset);

/// min <a, k> over the support; a must be non-negative and non-zero.
Integer support_min(const NewtonDiagram& d, const Point& a);

/// Convex hull of the support points attaining support_min.
LatticePolytope face(const NewtonDiagram& d, const Point& a);

/// The complete set E_I, sorted lexicographically by covector. Both
/// restrictions must be present.
std::vector<EssentialCovector> essential_covectors(const NewtonPair& pair, const CoordinateSubset& subset);

}  // namespace nzeta
