#pragma once

// Zeta-functions of the 0- and infinity-monodromy of a meromorphic germ
// P/Q, from four kinds of input data:
//
//   * the Newton pair of (P, Q)                     -> zeta_newton_pair
//   * the Newton diagram of P when Q = z_axis^d     -> zeta_power_denominator
//   * strata S_{k,l} of a resolution                -> zeta_acampo
//   * local zeta data of a partial resolution       -> zeta_partial_resolution
//
// The Newton routes are only valid for germs that are non-degenerate with
// respect to their Newton pair; that hypothesis is assumed, never checked.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "nzeta/newton.hpp"
#include "nzeta/zeta.hpp"

namespace nzeta {

enum class Side { Zero, Infinity };

const char* to_string(Side s);

/// A multiplicity (l-1)! V_a that is not a non-negative integer. Always an
/// internal inconsistency.
class IntegralityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ZetaPair {
  ZetaFactorization zeta0;
  ZetaFactorization zeta_inf;

  ZetaPair swapped() const { return {zeta_inf, zeta0}; }
  friend bool operator==(const ZetaPair&, const ZetaPair&) = default;
};

/// Points of the exceptional divisor where P and Q lift to u*y^k and v*y^l.
struct ResolutionStratum {
  std::int64_t k = 0;
  std::int64_t l = 0;
  std::int64_t chi = 0;
};

/// A stratum of a partial resolution with constant local zeta-functions.
struct LocalZetaStratum {
  ZetaFactorization zeta0;
  ZetaFactorization zeta_inf;
  std::int64_t chi = 0;
};

/// One row of the per-subset audit table.
struct CovectorContribution {
  EssentialCovector covector;
  Integer multiplicity;        // (l-1)! * V_a
  std::optional<Side> side;    // empty when m1 == m2
};

struct SubsetTrace {
  CoordinateSubset subset;
  bool meets_both = false;  // both diagrams intersect L_I
  std::vector<CovectorContribution> rows;
  ZetaPair zeta;
};

struct PairTrace {
  std::vector<SubsetTrace> subsets;  // ordered by |I|, then lexicographically
  ZetaPair result;
};

/// Integer multiplicity (l-1)! * v; throws IntegralityError otherwise.
Integer checked_multiplicity(const Rational& v, std::size_t l);

ZetaFactorization zeta_subset(const NewtonPair& pair, const CoordinateSubset& subset, Side side);
ZetaFactorization zeta_level(const NewtonPair& pair, std::size_t l, Side side);
ZetaPair zeta_newton_pair(const NewtonPair& pair);

/// zeta_newton_pair together with every intermediate quantity.
PairTrace trace_newton_pair(const NewtonPair& pair);

/// Direct evaluation for f = P / z_axis^d from the faces of the diagram of P.
/// Must agree with zeta_newton_pair(P, {d * e_axis}).
ZetaPair zeta_power_denominator(const NewtonDiagram& gamma, const Integer& d, std::size_t axis);

/// The Newton pair (gamma, {d * e_axis}).
NewtonPair power_denominator_pair(const NewtonDiagram& gamma, const Integer& d, std::size_t axis);

ZetaFactorization zeta_acampo(std::span<const ResolutionStratum> strata, Side side);
ZetaPair zeta_partial_resolution(std::span<const LocalZetaStratum> strata);

}  // namespace nzeta
