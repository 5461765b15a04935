#pragma once

// JSON wire formats:
//
//   zeta      {"factors":[{"m":<int>,"e":<int>}, ...]}          sorted by m
//   strata    {"strata":[{"k":int,"l":int,"chi":int}, ...]}      resolution
//   strata    {"strata":[{"zeta0":zeta,"zetaInf":zeta,"chi":int}, ...]}
//   result    {"zeta0":zeta,"zetaInf":zeta,"assumptions":[...],"trace":...}
//   polytopes {"dim":m,"polytopes":[[[int,...], ...], ...]}

#include <stdexcept>
#include <utility>
#include <vector>

#include "json.hpp"
#include "nzeta/engine.hpp"
#include "nzeta/lattice.hpp"
#include "nzeta/support.hpp"
#include "nzeta/zeta.hpp"

namespace nzeta {

using Json = nlohmann::json;

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json zeta_to_json(const ZetaFactorization& z);
ZetaFactorization zeta_from_json(const Json& j);

std::vector<ResolutionStratum> resolution_strata_from_json(const Json& j);
std::vector<LocalZetaStratum> local_strata_from_json(const Json& j);
Json resolution_strata_to_json(const std::vector<ResolutionStratum>& strata);
Json local_strata_to_json(const std::vector<LocalZetaStratum>& strata);

/// Result object; `trace` is attached only when non-null. The Newton routes
/// list "newton-nondegenerate" under "assumptions"; the strata routes list
/// nothing.
Json result_to_json(const ZetaPair& z, const Json& trace = nullptr, bool newton_route = true);
ZetaPair result_from_json(const Json& j);

/// Per-subset covector tables; subsets are named by variable.
Json trace_to_json(const PairTrace& trace, const VariableMap& vars);

struct PolytopeInput {
  std::size_t dim = 0;
  std::vector<LatticePolytope> bodies;
};
PolytopeInput polytopes_from_json(const Json& j);

/// Integer as a JSON number when it fits in 64 bits, else a decimal string.
Json integer_to_json(const Integer& v);

}  // namespace nzeta
