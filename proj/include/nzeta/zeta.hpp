#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nzeta/integer.hpp"

namespace nzeta {

/// A formal product prod_m (1 - t^m)^{e_m} with integer multiplicities.
///
/// Stored canonically: keys m >= 1, no zero multiplicities. Products and
/// integer powers keep the canonical form, so == is exact equality.
class ZetaFactorization {
 public:
  using Factors = std::map<std::int64_t, std::int64_t>;

  ZetaFactorization() = default;

  static ZetaFactorization one() { return {}; }
  /// (1 - t^m)^e; e = 0 gives one(). Throws for m < 1.
  static ZetaFactorization cyclotomic_factor(std::int64_t m, std::int64_t e);
  /// Builds from an arbitrary map, dropping zero multiplicities.
  static ZetaFactorization from_factors(const Factors& f);

  const Factors& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::int64_t multiplicity(std::int64_t m) const;

  ZetaFactorization& operator*=(const ZetaFactorization& other);
  friend ZetaFactorization operator*(ZetaFactorization a, const ZetaFactorization& b) { return a *= b; }
  ZetaFactorization pow(std::int64_t k) const;
  ZetaFactorization inverse() const { return pow(-1); }

  friend bool operator==(const ZetaFactorization&, const ZetaFactorization&) = default;

  /// "1", "(1-t)^-1", "(1-t)(1-t^2)^3" ... ascending m.
  std::string to_string() const;

  /// Taylor coefficients at t = 0 for degrees 0..order.
  std::vector<Integer> expand_series(std::size_t order) const;

 private:
  Factors factors_;
};

inline ZetaFactorization mul(const ZetaFactorization& a, const ZetaFactorization& b) { return a * b; }
inline ZetaFactorization pow(const ZetaFactorization& a, std::int64_t k) { return a.pow(k); }

}  // namespace nzeta
