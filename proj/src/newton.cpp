#include "nzeta/newton.hpp"

#include <algorithm>
#include <numeric>

#include "nzeta/cone.hpp"

namespace nzeta {
namespace {

bool dominated(const Point& p, const std::vector<Point>& pts) {
  for (const auto& q : pts) {
    if (q == p) continue;
    bool le = true;
    for (std::size_t i = 0; i < p.size() && le; ++i) le = q[i] <= p[i];
    if (le) return true;
  }
  return false;
}

std::vector<Point> unit_rays(std::size_t l) {
  std::vector<Point> rays(l, Point(l, 0));
  for (std::size_t i = 0; i < l; ++i) rays[i][i] = 1;
  return rays;
}

}  // namespace

NewtonDiagram::NewtonDiagram(GermSupport support)
    : support_(std::move(support)), hull_(convex_hull(support_.points(), support_.ambient_dim())) {}

NewtonPair::NewtonPair(NewtonDiagram gamma1, NewtonDiagram gamma2) : gamma1_(std::move(gamma1)), gamma2_(std::move(gamma2)) {
  if (gamma1_.ambient_dim() != gamma2_.ambient_dim())
    throw DimensionError("Newton pair: numerator and denominator have different ambient dimensions");
}

CoordinateSubset::CoordinateSubset(std::vector<std::size_t> indices, std::size_t ambient_dim)
    : indices_(std::move(indices)), ambient_dim_(ambient_dim) {
  std::sort(indices_.begin(), indices_.end());
  if (indices_.empty()) throw std::invalid_argument("coordinate subset must be non-empty");
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end())
    throw std::invalid_argument("coordinate subset has repeated indices");
  if (indices_.back() >= ambient_dim_) throw std::invalid_argument("coordinate subset index out of range");
}

bool CoordinateSubset::contains(std::size_t i) const { return std::binary_search(indices_.begin(), indices_.end(), i); }

Point CoordinateSubset::project(const Point& p) const {
  Point q;
  q.reserve(indices_.size());
  for (auto i : indices_) q.push_back(p.at(i));
  return q;
}

Point CoordinateSubset::embed(const Point& q) const {
  if (q.size() != indices_.size()) throw DimensionError("embed: wrong restricted dimension");
  Point p(ambient_dim_, 0);
  for (std::size_t k = 0; k < indices_.size(); ++k) p[indices_[k]] = q[k];
  return p;
}

std::vector<CoordinateSubset> CoordinateSubset::all_of_size(std::size_t ambient_dim, std::size_t l) {
  std::vector<CoordinateSubset> out;
  if (l == 0 || l > ambient_dim) return out;
  std::vector<bool> pick(ambient_dim, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(l), true);
  do {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < ambient_dim; ++i)
      if (pick[i]) idx.push_back(i);
    out.emplace_back(std::move(idx), ambient_dim);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

std::optional<NewtonDiagram> restrict(const NewtonDiagram& d, const CoordinateSubset& subset) {
  if (subset.ambient_dim() != d.ambient_dim()) throw DimensionError("restrict: subset of a different ambient space");
  std::vector<Point> pts;
  for (const auto& p : d.points()) {
    bool inside = true;
    for (std::size_t i = 0; i < p.size() && inside; ++i) inside = subset.contains(i) || p[i] == 0;
    if (inside) pts.push_back(subset.project(p));
  }
  if (pts.empty()) return std::nullopt;
  return NewtonDiagram(GermSupport(subset.size(), std::move(pts)));
}

Integer support_min(const NewtonDiagram& d, const Point& a) {
  if (a.size() != d.ambient_dim()) throw DimensionError("support_min: covector of wrong dimension");
  if (is_zero(a) || std::any_of(a.begin(), a.end(), [](const Integer& x) { return x < 0; }))
    throw std::invalid_argument("support_min: covector must be non-negative and non-zero");
  Integer best = dot(a, d.points().front());
  for (const auto& p : d.points()) best = std::min(best, Integer(dot(a, p)));
  return best;
}

LatticePolytope face(const NewtonDiagram& d, const Point& a) {
  const Integer m = support_min(d, a);
  std::vector<Point> argmin;
  for (const auto& p : d.points())
    if (dot(a, p) == m) argmin.push_back(p);
  return convex_hull(argmin, d.ambient_dim());
}

std::vector<EssentialCovector> essential_covectors(const NewtonPair& pair, const CoordinateSubset& subset) {
  auto r1 = restrict(pair.gamma1(), subset);
  auto r2 = restrict(pair.gamma2(), subset);
  if (!r1 || !r2) throw std::invalid_argument("essential_covectors: a diagram does not meet L_I");
  const std::size_t l = subset.size();

  // Candidate normals: the strictly positive inner facet normals of
  // conv(S1 + S2) + R_+^l.
  std::vector<Point> normals;
  if (l == 1) {
    normals.push_back(Point{1});
  } else {
    std::vector<Point> sums;
    for (const auto& p : r1->points())
      for (const auto& q : r2->points()) sums.push_back(add(p, q));
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    std::vector<Point> minimal;
    for (const auto& s : sums)
      if (!dominated(s, sums)) minimal.push_back(s);
    for (const auto& f : polyhedron_facets(minimal, unit_rays(l))) {
      if (std::all_of(f.normal.begin(), f.normal.end(), [](const Integer& x) { return x > 0; })) normals.push_back(f.normal);
    }
  }

  std::vector<EssentialCovector> out;
  for (const auto& a : normals) {
    EssentialCovector e;
    e.m1 = support_min(*r1, a);
    e.m2 = support_min(*r2, a);
    LatticePolytope f1 = face(*r1, a), f2 = face(*r2, a);
    if (minkowski_sum(f1, f2).affine_dim() != l - 1)
      throw std::logic_error("essential_covectors: facet normal with a face of the wrong dimension");
    auto profile = mixed_volume_profile(f1, f2, l - 1);
    e.v_a = std::accumulate(profile.begin(), profile.end(), Rational(0));

    auto lift = [&](const LatticePolytope& p) {
      std::vector<Point> pts;
      for (const auto& v : p.vertices()) pts.push_back(subset.embed(v));
      return convex_hull(pts, subset.ambient_dim());
    };
    e.a = subset.embed(a);
    e.delta1 = lift(f1);
    e.delta2 = lift(f2);
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const EssentialCovector& x, const EssentialCovector& y) { return x.a < y.a; });
  return out;
}

}  // namespace nzeta
