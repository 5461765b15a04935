#include "nzeta/lattice.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "nzeta/cone.hpp"

namespace nzeta {
namespace {

std::vector<Point> sorted_unique(std::span<const Point> points) {
  std::vector<Point> v(points.begin(), points.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Volume of conv(pts), pts in Z^r spanning Z^r affinely, in units of the
// fundamental cell of Z^r. Pyramid decomposition over facets seen from an
// apex; facet volumes are measured in their own saturated frames.
Rational full_volume(const std::vector<Point>& pts, std::size_t r) {
  if (r == 0) return 1;
  if (r == 1) {
    auto [lo, hi] = std::minmax_element(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a[0] < b[0]; });
    return Rational((*hi)[0] - (*lo)[0]);
  }
  const auto facets = polyhedron_facets(pts);
  const Point& apex = pts.front();
  Rational total = 0;
  for (const auto& f : facets) {
    Integer height = dot(f.normal, apex) - f.offset;
    if (height == 0) continue;
    std::vector<Point> on_facet;
    for (const auto& p : pts)
      if (f.on_boundary(p)) on_facet.push_back(p);
    total += Rational(height) * lattice_volume(convex_hull(on_facet, r));
  }
  return total / Rational(Integer(r));
}

// Solves A x = b exactly; A square and non-singular.
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw std::logic_error("solve_exact: singular interpolation system");
    std::swap(a[piv], a[c]);
    std::swap(b[piv], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

// Bodies translated to the origin and written in coordinates of the common
// saturated direction lattice (Z^rank).
struct CommonFrame {
  std::size_t rank = 0;
  std::vector<std::vector<Point>> bodies;
};

CommonFrame common_frame(std::span<const LatticePolytope> bodies, std::size_t m) {
  CommonFrame cf;
  if (bodies.empty()) return cf;
  const std::size_t n = bodies.front().ambient_dim();
  std::vector<Point> directions;
  for (const auto& b : bodies) {
    if (b.ambient_dim() != n) throw DimensionError("mixed volume: bodies have different ambient dimensions");
    for (const auto& v : b.vertices()) directions.push_back(subtract(v, b.vertices().front()));
  }
  auto frame = AffineLatticeFrame::from_directions(Point(n, 0), directions);
  cf.rank = frame.dim();
  if (cf.rank > m) throw DimensionError("mixed volume: bodies span more than the measuring dimension");
  for (const auto& b : bodies) {
    std::vector<Point> coords;
    for (const auto& v : b.vertices()) coords.push_back(frame.direction_coordinates(subtract(v, b.vertices().front())));
    cf.bodies.push_back(std::move(coords));
  }
  return cf;
}

// lattice volume (dimension m) of sum_i weights[i] * bodies[i], all in Z^m.
Rational combination_volume(const std::vector<std::vector<Point>>& bodies, const std::vector<Integer>& weights, std::size_t m) {
  std::vector<Point> acc{Point(m, 0)};
  for (std::size_t i = 0; i < bodies.size(); ++i) {
    if (weights[i] == 0) continue;
    std::vector<Point> next;
    next.reserve(acc.size() * bodies[i].size());
    for (const auto& p : acc)
      for (const auto& q : bodies[i]) next.push_back(add(p, scale(q, weights[i])));
    acc = convex_hull(next, m).vertices();
  }
  return lattice_volume(convex_hull(acc, m), m);
}

// All exponent vectors of length k with entries summing to at most total.
void compositions(std::size_t k, unsigned total, std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  unsigned used = 0;
  for (auto c : cur) used += c;
  for (unsigned v = 0; used + v <= total; ++v) {
    cur.push_back(v);
    compositions(k, total, cur, out);
    cur.pop_back();
  }
}

// Coefficients of the homogeneous polynomial vol(sum lambda_i K_i), keyed by
// the full exponent vector alpha (|alpha| = m).
std::map<std::vector<unsigned>, Rational> volume_polynomial(const std::vector<std::vector<Point>>& bodies, std::size_t m) {
  const std::size_t k = bodies.size();
  std::vector<std::vector<unsigned>> monomials;
  std::vector<unsigned> cur;
  compositions(k - 1, static_cast<unsigned>(m), cur, monomials);

  std::vector<std::vector<Rational>> a(monomials.size(), std::vector<Rational>(monomials.size()));
  std::vector<Rational> rhs(monomials.size());
  for (std::size_t row = 0; row < monomials.size(); ++row) {
    const auto& mu = monomials[row];
    std::vector<Integer> weights(k, 1);
    for (std::size_t i = 0; i + 1 < k; ++i) weights[i] = mu[i];
    rhs[row] = combination_volume(bodies, weights, m);
    for (std::size_t col = 0; col < monomials.size(); ++col) {
      Integer term = 1;
      for (std::size_t i = 0; i + 1 < k; ++i) {
        Integer pw;
        mpz_pow_ui(pw.get_mpz_t(), Integer(mu[i]).get_mpz_t(), monomials[col][i]);
        term *= pw;
      }
      a[row][col] = term;
    }
  }
  auto coef = solve_exact(std::move(a), std::move(rhs));
  std::map<std::vector<unsigned>, Rational> out;
  for (std::size_t col = 0; col < monomials.size(); ++col) {
    auto alpha = monomials[col];
    unsigned used = 0;
    for (auto c : alpha) used += c;
    alpha.push_back(static_cast<unsigned>(m) - used);
    out[alpha] = coef[col];
  }
  return out;
}

}  // namespace

AffineLatticeFrame AffineLatticeFrame::from_directions(Point origin, std::span<const Point> directions) {
  const std::size_t n = origin.size();
  std::vector<Point> m(directions.begin(), directions.end());
  for (const auto& row : m)
    if (row.size() != n) throw DimensionError("affine frame: dimension mismatch");

  // Column reduction M U = [H | 0] with U unimodular; V = U^{-1}.
  std::vector<Point> u(n, Point(n, 0)), v(n, Point(n, 0));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = v[i][i] = 1;

  std::size_t rank = 0;
  for (std::size_t i = 0; i < m.size() && rank < n; ++i) {
    for (std::size_t j = rank + 1; j < n; ++j) {
      if (m[i][j] == 0) continue;
      Integer x = m[i][rank], y = m[i][j], g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      Integer b = -y / g, d = x / g;
      // columns (rank, j) <- (s*c_r + t*c_j, b*c_r + d*c_j)
      for (auto& row : m) {
        Integer cr = row[rank], cj = row[j];
        row[rank] = s * cr + t * cj;
        row[j] = b * cr + d * cj;
      }
      for (auto& row : u) {
        Integer cr = row[rank], cj = row[j];
        row[rank] = s * cr + t * cj;
        row[j] = b * cr + d * cj;
      }
      // inverse acts on rows (rank, j) of V
      Point vr = v[rank], vj = v[j];
      for (std::size_t c = 0; c < n; ++c) {
        v[rank][c] = d * vr[c] - b * vj[c];
        v[j][c] = -t * vr[c] + s * vj[c];
      }
    }
    if (m[i][rank] != 0) ++rank;
  }

  AffineLatticeFrame f;
  f.origin_ = std::move(origin);
  f.basis_.assign(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(rank));
  f.coordinate_map_ = std::move(u);
  return f;
}

Point AffineLatticeFrame::direction_coordinates(const Point& d) const {
  const std::size_t n = ambient_dim();
  if (d.size() != n) throw DimensionError("frame coordinates: dimension mismatch");
  Point full(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) full[j] += d[i] * coordinate_map_[i][j];
  for (std::size_t j = dim(); j < n; ++j)
    if (full[j] != 0) throw DimensionError("frame coordinates: point outside the affine hull");
  full.resize(dim());
  return full;
}

Point AffineLatticeFrame::coordinates(const Point& x) const { return direction_coordinates(subtract(x, origin_)); }

LatticePolytope convex_hull(std::span<const Point> points, std::size_t dim) {
  if (points.empty()) throw std::invalid_argument("convex_hull: empty point set");
  if (dim == 0) throw std::invalid_argument("convex_hull: dimension must be positive");
  for (const auto& p : points)
    if (p.size() != dim) throw DimensionError("convex_hull: point of wrong dimension");

  auto pts = sorted_unique(points);
  std::vector<Point> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(subtract(pts[i], pts[0]));
  auto frame = AffineLatticeFrame::from_directions(pts[0], diffs);
  const std::size_t r = frame.dim();

  LatticePolytope out;
  out.ambient_dim_ = dim;
  out.affine_dim_ = r;
  if (r == 0) {
    out.vertices_ = {pts[0]};
    return out;
  }
  std::vector<Point> coords;
  coords.reserve(pts.size());
  for (const auto& p : pts) coords.push_back(frame.coordinates(p));

  if (r == 1) {
    auto [lo, hi] = std::minmax_element(coords.begin(), coords.end(), [](const Point& a, const Point& b) { return a[0] < b[0]; });
    out.vertices_ = {pts[static_cast<std::size_t>(lo - coords.begin())], pts[static_cast<std::size_t>(hi - coords.begin())]};
  } else {
    const auto facets = polyhedron_facets(coords);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      std::vector<Point> tight;
      for (const auto& f : facets)
        if (f.on_boundary(coords[i])) tight.push_back(f.normal);
      if (tight.size() >= r && rank_of(tight) == r) out.vertices_.push_back(pts[i]);
    }
  }
  std::sort(out.vertices_.begin(), out.vertices_.end());
  return out;
}

AffineLatticeFrame affine_frame(const LatticePolytope& p) {
  if (p.vertices().empty()) throw std::invalid_argument("affine_frame: empty polytope");
  std::vector<Point> diffs;
  for (const auto& v : p.vertices()) diffs.push_back(subtract(v, p.vertices().front()));
  return AffineLatticeFrame::from_directions(p.vertices().front(), diffs);
}

Rational lattice_volume(const LatticePolytope& p, std::optional<std::size_t> measure_dim) {
  if (p.vertices().empty()) throw std::invalid_argument("lattice_volume: empty polytope");
  const std::size_t r = p.affine_dim();
  if (measure_dim) {
    if (*measure_dim > r) return 0;
    if (*measure_dim < r) throw DimensionError("lattice_volume: polytope has larger affine dimension than requested");
  }
  auto frame = affine_frame(p);
  std::vector<Point> coords;
  for (const auto& v : p.vertices()) coords.push_back(frame.coordinates(v));
  return full_volume(coords, r);
}

LatticePolytope minkowski_sum(const LatticePolytope& a, const LatticePolytope& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("minkowski_sum: dimension mismatch");
  std::vector<Point> sums;
  sums.reserve(a.vertices().size() * b.vertices().size());
  for (const auto& x : a.vertices())
    for (const auto& y : b.vertices()) sums.push_back(add(x, y));
  return convex_hull(sums, a.ambient_dim());
}

LatticePolytope dilate(const LatticePolytope& p, const Integer& k) {
  if (k < 0) throw std::invalid_argument("dilate: negative factor");
  std::vector<Point> pts;
  for (const auto& v : p.vertices()) pts.push_back(scale(v, k));
  return convex_hull(pts, p.ambient_dim());
}

LatticePolytope translate(const LatticePolytope& p, const Point& t) {
  std::vector<Point> pts;
  for (const auto& v : p.vertices()) pts.push_back(add(v, t));
  return convex_hull(pts, p.ambient_dim());
}

Rational mixed_volume(std::span<const LatticePolytope> bodies, std::size_t m) {
  if (bodies.size() != m) throw std::invalid_argument("mixed_volume: expected exactly m bodies");
  if (m == 0) return 1;

  std::vector<LatticePolytope> distinct;
  std::vector<unsigned> multiplicity;
  for (const auto& b : bodies) {
    auto it = std::find(distinct.begin(), distinct.end(), b);
    if (it == distinct.end()) {
      distinct.push_back(b);
      multiplicity.push_back(1);
    } else {
      ++multiplicity[static_cast<std::size_t>(it - distinct.begin())];
    }
  }
  auto cf = common_frame(distinct, m);
  if (cf.rank < m) return 0;
  if (distinct.size() == 1) return lattice_volume(distinct.front(), m);

  auto poly = volume_polynomial(cf.bodies, m);
  Rational coef = poly.at(multiplicity);
  Integer alpha_fact = 1;
  for (auto a : multiplicity) alpha_fact *= factorial(a);
  return coef * Rational(alpha_fact) / Rational(factorial(static_cast<unsigned>(m)));
}

std::vector<Rational> mixed_volume_profile(const LatticePolytope& a, const LatticePolytope& b, std::size_t m) {
  if (m == 0) return {Rational(1)};
  std::vector<LatticePolytope> pair{a, b};
  auto cf = common_frame(pair, m);
  std::vector<Rational> out(m + 1, Rational(0));
  if (cf.rank < m) return out;

  auto poly = volume_polynomial(cf.bodies, m);
  for (unsigned s = 0; s <= m; ++s) {
    std::vector<unsigned> alpha{s, static_cast<unsigned>(m) - s};
    out[s] = poly.at(alpha) / Rational(binomial(static_cast<unsigned>(m), s));
  }
  return out;
}

Rational mixed_volume_oracle(std::span<const LatticePolytope> bodies, std::size_t m) {
  if (bodies.size() != m) throw std::invalid_argument("mixed_volume_oracle: expected exactly m bodies");
  if (m == 0) return 1;
  const std::size_t n = bodies.front().ambient_dim();
  std::vector<Point> directions;
  for (const auto& b : bodies) {
    if (b.ambient_dim() != n) throw DimensionError("mixed volume: bodies have different ambient dimensions");
    for (const auto& v : b.vertices()) directions.push_back(subtract(v, b.vertices().front()));
  }
  if (rank_of(directions) > m) throw DimensionError("mixed volume: bodies span more than the measuring dimension");

  Rational total = 0;
  for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
    std::optional<LatticePolytope> sum;
    std::size_t size = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (!(mask & (std::size_t{1} << i))) continue;
      ++size;
      sum = sum ? minkowski_sum(*sum, bodies[i]) : bodies[i];
    }
    Rational vol = lattice_volume(*sum, m);
    if ((m - size) % 2 == 0) {
      total += vol;
    } else {
      total -= vol;
    }
  }
  return total / Rational(factorial(static_cast<unsigned>(m)));
}

Point primitive_covector(const Point& v) {
  if (is_zero(v)) throw std::invalid_argument("primitive_covector: zero vector");
  Integer g = gcd_of(v);
  Point out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

}  // namespace nzeta
