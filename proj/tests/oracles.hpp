#pragma once

// Independent reference computations used by the unit and acceptance
// suites. Nothing here calls the library's enumeration or volume code.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "nzeta/integer.hpp"

namespace nzeta::oracle {

// Determinant by cofactor expansion; matrices here are at most 4x4.
inline Integer cofactor_det(const std::vector<Point>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<Point> minor;
    for (std::size_t i = 1; i < n; ++i) {
      Point row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    Integer c = m[0][j] * cofactor_det(minor);
    if (j % 2 == 0) {
      total += c;
    } else {
      total -= c;
    }
  }
  return total;
}

// Rank via exact rational Gauss-Jordan.
inline std::size_t rational_rank(const std::vector<Point>& rows) {
  if (rows.empty()) return 0;
  std::vector<std::vector<Rational>> a;
  for (const auto& r : rows) a.emplace_back(r.begin(), r.end());
  const std::size_t cols = a.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      Rational f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Affine dimension of A + B for finite point sets A, B.
inline std::size_t sum_affine_dim(const std::vector<Point>& a, const std::vector<Point>& b) {
  std::vector<Point> diffs;
  for (const auto& p : a) {
    Point d(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) d[i] = p[i] - a.front()[i];
    diffs.push_back(d);
  }
  for (const auto& p : b) {
    Point d(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) d[i] = p[i] - b.front()[i];
    diffs.push_back(d);
  }
  return rational_rank(diffs);
}

inline Integer pairing(const Point& a, const Point& x) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
  return s;
}

struct CovectorRecord {
  Point a;
  Integer m1, m2;
  friend bool operator<(const CovectorRecord& x, const CovectorRecord& y) {
    return std::tie(x.a, x.m1, x.m2) < std::tie(y.a, y.m1, y.m2);
  }
  friend bool operator==(const CovectorRecord&, const CovectorRecord&) = default;
};

// E_I by brute force on restricted supports s1, s2 in Z^l: normals of all
// hyperplanes through l pairwise sums (both orientations), filtered by the
// definition (strictly positive, dim of the sum of argmin faces = l - 1).
inline std::set<CovectorRecord> essential_covectors_bruteforce(const std::vector<Point>& s1, const std::vector<Point>& s2) {
  const std::size_t l = s1.front().size();
  std::vector<Point> sums;
  for (const auto& p : s1)
    for (const auto& q : s2) {
      Point s(l);
      for (std::size_t i = 0; i < l; ++i) s[i] = p[i] + q[i];
      sums.push_back(s);
    }
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());

  std::set<CovectorRecord> out;
  if (sums.size() < l) return out;
  std::vector<bool> pick(sums.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(l), true);
  do {
    std::vector<Point> chosen;
    for (std::size_t i = 0; i < sums.size(); ++i)
      if (pick[i]) chosen.push_back(sums[i]);
    std::vector<Point> diffs;
    for (std::size_t k = 1; k < l; ++k) {
      Point d(l);
      for (std::size_t i = 0; i < l; ++i) d[i] = chosen[k][i] - chosen[0][i];
      diffs.push_back(d);
    }
    Point normal(l);
    for (std::size_t j = 0; j < l; ++j) {
      std::vector<Point> minor;
      for (const auto& d : diffs) {
        Point row;
        for (std::size_t k = 0; k < l; ++k)
          if (k != j) row.push_back(d[k]);
        minor.push_back(row);
      }
      normal[j] = cofactor_det(minor);
      if (j % 2 == 1) normal[j] = -normal[j];
    }
    if (std::all_of(normal.begin(), normal.end(), [](const Integer& x) { return x == 0; })) continue;
    Integer g = 0;
    for (const auto& x : normal) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    for (auto& x : normal) x /= g;
    for (int orient : {1, -1}) {
      Point a = normal;
      if (orient < 0)
        for (auto& x : a) x = -x;
      if (!std::all_of(a.begin(), a.end(), [](const Integer& x) { return x > 0; })) continue;
      auto argmin = [&](const std::vector<Point>& s, Integer& m) {
        m = pairing(a, s.front());
        for (const auto& p : s) m = std::min(m, pairing(a, p));
        std::vector<Point> f;
        for (const auto& p : s)
          if (pairing(a, p) == m) f.push_back(p);
        return f;
      };
      CovectorRecord rec{a, 0, 0};
      auto f1 = argmin(s1, rec.m1);
      auto f2 = argmin(s2, rec.m2);
      if (sum_affine_dim(f1, f2) == l - 1) out.insert(rec);
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

// Random non-empty support in Z_{>=0}^dim avoiding the origin.
inline std::vector<Point> random_support(std::mt19937& rng, std::size_t dim, int max_points, int max_exp) {
  std::uniform_int_distribution<int> count(1, max_points), e(0, max_exp);
  std::vector<Point> pts;
  const int k = count(rng);
  while (pts.empty()) {
    for (int attempt = 0; attempt < k; ++attempt) {
      Point p(dim);
      bool nonzero = false;
      for (auto& x : p) {
        x = e(rng);
        nonzero = nonzero || x != 0;
      }
      if (nonzero && std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
  }
  return pts;
}

}  // namespace nzeta::oracle
