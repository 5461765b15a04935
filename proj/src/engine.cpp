#include "nzeta/engine.hpp"

#include <algorithm>

namespace nzeta {
namespace {

ZetaFactorization factor_for(const Integer& m1, const Integer& m2, const Integer& mult, Side side) {
  if (side == Side::Zero && m1 > m2) return ZetaFactorization::cyclotomic_factor(to_int64(m1 - m2), to_int64(mult));
  if (side == Side::Infinity && m1 < m2) return ZetaFactorization::cyclotomic_factor(to_int64(m2 - m1), to_int64(mult));
  return ZetaFactorization::one();
}

std::optional<Side> side_of(const Integer& m1, const Integer& m2) {
  if (m1 > m2) return Side::Zero;
  if (m1 < m2) return Side::Infinity;
  return std::nullopt;
}

SubsetTrace trace_subset(const NewtonPair& pair, const CoordinateSubset& subset) {
  SubsetTrace t{subset, false, {}, {}};
  if (!restrict(pair.gamma1(), subset) || !restrict(pair.gamma2(), subset)) return t;
  t.meets_both = true;
  const std::size_t l = subset.size();
  for (auto& e : essential_covectors(pair, subset)) {
    CovectorContribution row{std::move(e), 0, std::nullopt};
    row.multiplicity = checked_multiplicity(row.covector.v_a, l);
    row.side = side_of(row.covector.m1, row.covector.m2);
    t.zeta.zeta0 *= factor_for(row.covector.m1, row.covector.m2, row.multiplicity, Side::Zero);
    t.zeta.zeta_inf *= factor_for(row.covector.m1, row.covector.m2, row.multiplicity, Side::Infinity);
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::int64_t alternating_sign(std::size_t l) { return l % 2 == 1 ? 1 : -1; }

// The (l-1)-dimensional compact faces of conv(pts) + R_+^l, with their
// primitive inner normals: normals of hyperplanes through l support points
// that are strictly positive and cut out a face of full dimension l - 1.
struct CompactFacet {
  Point normal;
  Integer value;
  LatticePolytope face;
};

Point hyperplane_normal(const std::vector<Point>& pts) {
  const std::size_t l = pts.size();
  std::vector<Point> diffs;
  for (std::size_t k = 1; k < l; ++k) diffs.push_back(subtract(pts[k], pts[0]));
  Point normal(l);
  for (std::size_t j = 0; j < l; ++j) {
    std::vector<Point> minor;
    for (const auto& d : diffs) {
      Point row;
      for (std::size_t c = 0; c < l; ++c)
        if (c != j) row.push_back(d[c]);
      minor.push_back(std::move(row));
    }
    normal[j] = determinant(std::move(minor));
    if (j % 2 == 1) normal[j] = -normal[j];
  }
  return normal;
}

std::vector<CompactFacet> compact_facets(const std::vector<Point>& pts) {
  const std::size_t l = pts.front().size();
  std::vector<CompactFacet> out;
  auto consider = [&](const Point& normal) {
    if (!std::all_of(normal.begin(), normal.end(), [](const Integer& x) { return x > 0; })) return;
    Point a = primitive_covector(normal);
    if (std::any_of(out.begin(), out.end(), [&](const CompactFacet& f) { return f.normal == a; })) return;
    Integer value = dot(a, pts.front());
    for (const auto& p : pts) value = std::min(value, Integer(dot(a, p)));
    std::vector<Point> on;
    for (const auto& p : pts)
      if (dot(a, p) == value) on.push_back(p);
    auto f = convex_hull(on, l);
    if (f.affine_dim() + 1 == l) out.push_back({std::move(a), std::move(value), std::move(f)});
  };

  if (l == 1) {
    consider(Point{1});
    return out;
  }
  if (pts.size() < l) return out;
  std::vector<bool> pick(pts.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(l), true);
  do {
    std::vector<Point> chosen;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (pick[i]) chosen.push_back(pts[i]);
    Point n = hyperplane_normal(chosen);
    if (is_zero(n)) continue;
    consider(n);
    consider(scale(n, -1));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end(), [](const CompactFacet& x, const CompactFacet& y) { return x.normal < y.normal; });
  return out;
}

}  // namespace

const char* to_string(Side s) { return s == Side::Zero ? "zero" : "infinity"; }

Integer checked_multiplicity(const Rational& v, std::size_t l) {
  Rational scaled = v * Rational(factorial(static_cast<unsigned>(l - 1)));
  scaled.canonicalize();
  if (scaled.get_den() != 1 || scaled < 0)
    throw IntegralityError("multiplicity (l-1)!*V_a = " + to_string(scaled) + " is not a non-negative integer");
  return scaled.get_num();
}

ZetaFactorization zeta_subset(const NewtonPair& pair, const CoordinateSubset& subset, Side side) {
  auto t = trace_subset(pair, subset);
  return side == Side::Zero ? t.zeta.zeta0 : t.zeta.zeta_inf;
}

ZetaFactorization zeta_level(const NewtonPair& pair, std::size_t l, Side side) {
  if (l < 1 || l > pair.ambient_dim()) throw std::invalid_argument("zeta_level: l out of range");
  ZetaFactorization z;
  for (const auto& subset : CoordinateSubset::all_of_size(pair.ambient_dim(), l)) z *= zeta_subset(pair, subset, side);
  return z;
}

PairTrace trace_newton_pair(const NewtonPair& pair) {
  PairTrace trace;
  const std::size_t n1 = pair.ambient_dim();
  for (std::size_t l = 1; l <= n1; ++l) {
    ZetaPair level;
    for (const auto& subset : CoordinateSubset::all_of_size(n1, l)) {
      auto t = trace_subset(pair, subset);
      level.zeta0 *= t.zeta.zeta0;
      level.zeta_inf *= t.zeta.zeta_inf;
      trace.subsets.push_back(std::move(t));
    }
    trace.result.zeta0 *= level.zeta0.pow(alternating_sign(l));
    trace.result.zeta_inf *= level.zeta_inf.pow(alternating_sign(l));
  }
  return trace;
}

ZetaPair zeta_newton_pair(const NewtonPair& pair) { return trace_newton_pair(pair).result; }

NewtonPair power_denominator_pair(const NewtonDiagram& gamma, const Integer& d, std::size_t axis) {
  if (d < 1) throw std::invalid_argument("power denominator: degree must be >= 1");
  if (axis >= gamma.ambient_dim()) throw std::invalid_argument("power denominator: axis out of range");
  Point q(gamma.ambient_dim(), 0);
  q[axis] = d;
  return NewtonPair(gamma, NewtonDiagram(GermSupport(gamma.ambient_dim(), {q})));
}

ZetaPair zeta_power_denominator(const NewtonDiagram& gamma, const Integer& d, std::size_t axis) {
  if (d < 1) throw std::invalid_argument("power denominator: degree must be >= 1");
  const std::size_t n1 = gamma.ambient_dim();
  if (axis >= n1) throw std::invalid_argument("power denominator: axis out of range");

  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < n1; ++i)
    if (i != axis) others.push_back(i);

  ZetaPair result;
  for (std::size_t l = 1; l <= n1; ++l) {
    ZetaPair level;
    // I ranges over (l-1)-subsets of the other coordinates; J = I + {axis}.
    std::vector<bool> pick(others.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(l - 1), true);
    do {
      std::vector<std::size_t> j{axis};
      for (std::size_t k = 0; k < others.size(); ++k)
        if (pick[k]) j.push_back(others[k]);
      CoordinateSubset subset(j, n1);
      auto restricted = restrict(gamma, subset);
      if (!restricted) continue;
      const auto axis_pos = static_cast<std::size_t>(std::find(subset.indices().begin(), subset.indices().end(), axis) -
                                                     subset.indices().begin());
      for (const auto& f : compact_facets(restricted->points())) {
        Integer mult = checked_multiplicity(lattice_volume(f.face, l - 1), l);
        Integer denominator_value = d * f.normal[axis_pos];
        level.zeta0 *= factor_for(f.value, denominator_value, mult, Side::Zero);
        level.zeta_inf *= factor_for(f.value, denominator_value, mult, Side::Infinity);
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    result.zeta0 *= level.zeta0.pow(alternating_sign(l));
    result.zeta_inf *= level.zeta_inf.pow(alternating_sign(l));
  }
  return result;
}

ZetaFactorization zeta_acampo(std::span<const ResolutionStratum> strata, Side side) {
  ZetaFactorization z;
  for (const auto& s : strata) {
    if (s.k < 0 || s.l < 0) throw std::invalid_argument("resolution stratum: multiplicities must be non-negative");
    if (side == Side::Zero && s.k > s.l) z *= ZetaFactorization::cyclotomic_factor(s.k - s.l, s.chi);
    if (side == Side::Infinity && s.k < s.l) z *= ZetaFactorization::cyclotomic_factor(s.l - s.k, s.chi);
  }
  return z;
}

ZetaPair zeta_partial_resolution(std::span<const LocalZetaStratum> strata) {
  ZetaPair out;
  for (const auto& s : strata) {
    out.zeta0 *= s.zeta0.pow(s.chi);
    out.zeta_inf *= s.zeta_inf.pow(s.chi);
  }
  return out;
}

}  // namespace nzeta
