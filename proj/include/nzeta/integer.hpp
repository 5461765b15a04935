#pragma once

// Exact integer/rational arithmetic shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace nzeta {

using Integer = mpz_class;
using Rational = mpq_class;

/// An integer lattice point (or integer vector / covector).
using Point = std::vector<Integer>;

Integer gcd_of(std::span<const Integer> v);
Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

/// Inner product of equally sized integer vectors.
Integer dot(std::span<const Integer> a, std::span<const Integer> b);

Point add(const Point& a, const Point& b);
Point subtract(const Point& a, const Point& b);
Point scale(const Point& a, const Integer& k);

bool is_zero(std::span<const Integer> v);

/// Rank over Q of the given rows (fraction-free elimination).
std::size_t rank_of(std::vector<Point> rows);

/// Determinant of a square integer matrix (Bareiss).
Integer determinant(std::vector<Point> rows);

/// Throws std::overflow_error when the value does not fit.
std::int64_t to_int64(const Integer& v);

std::string to_string(const Rational& q);
std::string to_string(const Point& p);

}  // namespace nzeta
