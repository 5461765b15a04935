#include "nzeta/integer.hpp"

#include <stdexcept>
#include <utility>

namespace nzeta {

Integer gcd_of(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  return g;
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Point add(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Point subtract(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw std::invalid_argument("subtract: dimension mismatch");
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Point scale(const Point& a, const Integer& k) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
  return r;
}

bool is_zero(std::span<const Integer> v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

std::size_t rank_of(std::vector<Point> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        rows[r][k] = (rows[rank][c] * rows[r][k] - rows[r][c] * rows[rank][k]);
        mpz_divexact(rows[r][k].get_mpz_t(), rows[r][k].get_mpz_t(), prev.get_mpz_t());
      }
      rows[r][c] = 0;
    }
    prev = rows[rank][c];
    ++rank;
  }
  return rank;
}

Integer determinant(std::vector<Point> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::int64_t to_int64(const Integer& v) {
  if (!v.fits_slong_p() || sizeof(long) < sizeof(std::int64_t))
    throw std::overflow_error("integer " + v.get_str() + " exceeds 64 bits");
  return static_cast<std::int64_t>(v.get_si());
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

std::string to_string(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += p[i].get_str();
  }
  return s + ")";
}

}  // namespace nzeta
