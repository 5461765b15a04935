#include "nzeta/cone.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace nzeta {
namespace {

class IndexSet {
 public:
  explicit IndexSet(std::size_t n = 0) : words_((n + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= (std::uint64_t{1} << (i % 64)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool subset_of(const IndexSet& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }

  friend IndexSet operator&(const IndexSet& a, const IndexSet& b) {
    IndexSet r = a;
    for (std::size_t k = 0; k < r.words_.size(); ++k) r.words_[k] &= b.words_[k];
    return r;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  Point h;
  IndexSet zeros;
};

void make_primitive(Point& v) {
  Integer g = gcd_of(v);
  if (g > 1)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// Columns of G^{-1}, scaled to primitive integer vectors. Each column r_j
// satisfies G r_j = c_j e_j with c_j > 0.
std::vector<Point> inverse_columns(const std::vector<Point>& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = g[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw std::logic_error("inverse_columns: singular basis");
    std::swap(a[piv], a[c]);
    Rational inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<Point> cols(n, Point(n));
  for (std::size_t j = 0; j < n; ++j) {
    Integer den = 1;
    for (std::size_t i = 0; i < n; ++i) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a[i][n + j].get_den_mpz_t());
    for (std::size_t i = 0; i < n; ++i) {
      Rational v = a[i][n + j] * den;
      cols[j][i] = v.get_num();
    }
    make_primitive(cols[j]);
  }
  return cols;
}

}  // namespace

std::vector<Halfspace> polyhedron_facets(std::span<const Point> points, std::span<const Point> rays) {
  if (points.empty()) throw std::invalid_argument("polyhedron_facets: no points");
  const std::size_t d = points.front().size();
  const std::size_t dim = d + 1;

  std::vector<Point> gens;
  gens.reserve(points.size() + rays.size());
  for (const auto& p : points) {
    if (p.size() != d) throw std::invalid_argument("polyhedron_facets: dimension mismatch");
    Point g(dim);
    g[0] = 1;
    std::copy(p.begin(), p.end(), g.begin() + 1);
    gens.push_back(std::move(g));
  }
  for (const auto& r : rays) {
    if (r.size() != d) throw std::invalid_argument("polyhedron_facets: dimension mismatch");
    Point g(dim);
    g[0] = 0;
    std::copy(r.begin(), r.end(), g.begin() + 1);
    gens.push_back(std::move(g));
  }

  // Greedy choice of dim independent generators.
  std::vector<std::size_t> basis;
  std::vector<Point> basis_rows;
  for (std::size_t i = 0; i < gens.size() && basis.size() < dim; ++i) {
    basis_rows.push_back(gens[i]);
    if (rank_of(basis_rows) == basis_rows.size()) {
      basis.push_back(i);
    } else {
      basis_rows.pop_back();
    }
  }
  if (basis.size() < dim) throw std::invalid_argument("polyhedron_facets: polyhedron is not full-dimensional");

  const std::size_t ngen = gens.size();
  std::vector<Ray> current;
  {
    auto cols = inverse_columns(basis_rows);
    for (std::size_t j = 0; j < dim; ++j) {
      Ray r{std::move(cols[j]), IndexSet(ngen)};
      for (std::size_t k = 0; k < dim; ++k)
        if (k != j) r.zeros.set(basis[k]);
      current.push_back(std::move(r));
    }
  }

  std::vector<bool> in_basis(ngen, false);
  for (auto b : basis) in_basis[b] = true;

  for (std::size_t i = 0; i < ngen; ++i) {
    if (in_basis[i]) continue;
    const Point& a = gens[i];
    std::vector<Integer> val(current.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t k = 0; k < current.size(); ++k) {
      val[k] = dot(a, current[k].h);
      int s = sgn(val[k]);
      if (s > 0) pos.push_back(k);
      if (s < 0) neg.push_back(k);
    }
    if (neg.empty()) {
      for (std::size_t k = 0; k < current.size(); ++k)
        if (val[k] == 0) current[k].zeros.set(i);
      continue;
    }
    for (auto p : pos) {
      for (auto n : neg) {
        IndexSet common = current[p].zeros & current[n].zeros;
        if (common.count() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < current.size() && adjacent; ++k) {
          if (k == p || k == n) continue;
          if (common.subset_of(current[k].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray r{Point(dim), common};
        for (std::size_t c = 0; c < dim; ++c) r.h[c] = val[p] * current[n].h[c] - val[n] * current[p].h[c];
        make_primitive(r.h);
        r.zeros.set(i);
        next.push_back(std::move(r));
      }
    }
    for (std::size_t k = 0; k < current.size(); ++k) {
      if (val[k] > 0) {
        next.push_back(std::move(current[k]));
      } else if (val[k] == 0) {
        current[k].zeros.set(i);
        next.push_back(std::move(current[k]));
      }
    }
    current = std::move(next);
  }

  std::vector<Halfspace> out;
  for (auto& r : current) {
    Point n(r.h.begin() + 1, r.h.end());
    if (is_zero(n)) continue;
    Integer g = gcd_of(n);
    Integer offset = -r.h[0];
    for (auto& x : n) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    if (!mpz_divisible_p(offset.get_mpz_t(), g.get_mpz_t()))
      throw std::logic_error("polyhedron_facets: non-lattice facet offset");
    mpz_divexact(offset.get_mpz_t(), offset.get_mpz_t(), g.get_mpz_t());
    out.push_back(Halfspace{std::move(n), std::move(offset)});
  }
  std::sort(out.begin(), out.end(), [](const Halfspace& x, const Halfspace& y) {
    if (x.normal != y.normal) return x.normal < y.normal;
    return x.offset < y.offset;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace nzeta
