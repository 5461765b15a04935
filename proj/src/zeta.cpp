#include "nzeta/zeta.hpp"

#include <stdexcept>

namespace nzeta {
namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("zeta multiplicity overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("zeta multiplicity overflow");
  return r;
}

}  // namespace

ZetaFactorization ZetaFactorization::cyclotomic_factor(std::int64_t m, std::int64_t e) {
  if (m < 1) throw std::invalid_argument("cyclotomic_factor: m must be >= 1");
  ZetaFactorization z;
  if (e != 0) z.factors_[m] = e;
  return z;
}

ZetaFactorization ZetaFactorization::from_factors(const Factors& f) {
  ZetaFactorization z;
  for (auto [m, e] : f) z *= cyclotomic_factor(m, e);
  return z;
}

std::int64_t ZetaFactorization::multiplicity(std::int64_t m) const {
  auto it = factors_.find(m);
  return it == factors_.end() ? 0 : it->second;
}

ZetaFactorization& ZetaFactorization::operator*=(const ZetaFactorization& other) {
  for (auto [m, e] : other.factors_) {
    auto [it, inserted] = factors_.try_emplace(m, 0);
    it->second = checked_add(it->second, e);
    if (it->second == 0) factors_.erase(it);
  }
  return *this;
}

ZetaFactorization ZetaFactorization::pow(std::int64_t k) const {
  ZetaFactorization z;
  if (k == 0) return z;
  for (auto [m, e] : factors_) z.factors_[m] = checked_mul(e, k);
  return z;
}

std::string ZetaFactorization::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (auto [m, e] : factors_) {
    s += m == 1 ? "(1-t)" : "(1-t^" + std::to_string(m) + ")";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::vector<Integer> ZetaFactorization::expand_series(std::size_t order) const {
  std::vector<Integer> c(order + 1, 0);
  c[0] = 1;
  for (auto [m, e] : factors_) {
    const auto step = static_cast<std::size_t>(m);
    if (step > order) continue;
    const std::int64_t times = e > 0 ? e : -e;
    for (std::int64_t rep = 0; rep < times; ++rep) {
      if (e > 0) {
        // multiply by (1 - t^m): descending keeps the old values intact
        for (std::size_t k = order; k >= step; --k) c[k] -= c[k - step];
      } else {
        // divide by (1 - t^m): c_k += c_{k-m}, ascending
        for (std::size_t k = step; k <= order; ++k) c[k] += c[k - step];
      }
    }
  }
  return c;
}

}  // namespace nzeta
