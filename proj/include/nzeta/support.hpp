#pragma once

// Polynomial front-end: text -> exponent support.
//
// Only the set of exponents with non-zero combined coefficient is kept; the
// zeta formulas depend on nothing else.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nzeta/integer.hpp"

namespace nzeta {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Input is well-formed but does not describe a germ vanishing at 0.
class SupportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ordered coordinate names; position i names coordinate k_i.
class VariableMap {
 public:
  explicit VariableMap(std::vector<std::string> names);
  /// Comma-separated list, e.g. "x,y,z".
  static VariableMap parse(std::string_view list);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  /// Index of a name, or size() when absent.
  std::size_t index_of(std::string_view name) const;

 private:
  std::vector<std::string> names_;
};

/// Finite set of exponent vectors of a germ vanishing at the origin.
class GermSupport {
 public:
  /// Validates non-emptiness, non-negativity and that no point is the origin.
  GermSupport(std::size_t ambient_dim, std::vector<Point> points);

  std::size_t ambient_dim() const { return ambient_dim_; }
  /// Sorted, duplicate-free.
  const std::vector<Point>& points() const { return points_; }

  friend bool operator==(const GermSupport&, const GermSupport&) = default;

 private:
  std::size_t ambient_dim_;
  std::vector<Point> points_;
};

GermSupport parse_polynomial(std::string_view text, const VariableMap& vars);

/// Variables in order of first appearance in the given texts.
VariableMap collect_variables(const std::vector<std::string>& texts);

/// Sum of monomials with coefficient 1, e.g. "x^3 + x*y".
std::string render_support(const GermSupport& s, const VariableMap& vars);

}  // namespace nzeta
