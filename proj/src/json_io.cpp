#include "nzeta/json_io.hpp"

#include <string>

namespace nzeta {
namespace {

const Json& field(const Json& obj, const char* name, const std::string& where) {
  if (!obj.is_object()) throw SchemaError(where + ": expected an object");
  auto it = obj.find(name);
  if (it == obj.end()) throw SchemaError(where + ": missing field \"" + name + "\"");
  return *it;
}

std::int64_t int_field(const Json& obj, const char* name, const std::string& where) {
  const Json& v = field(obj, name, where);
  if (!v.is_number_integer()) throw SchemaError(where + ": field \"" + name + "\" must be an integer");
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
    throw SchemaError(where + ": field \"" + name + "\" out of range");
  return v.get<std::int64_t>();
}

const Json& array_field(const Json& obj, const char* name, const std::string& where) {
  const Json& v = field(obj, name, where);
  if (!v.is_array()) throw SchemaError(where + ": field \"" + name + "\" must be an array");
  return v;
}

}  // namespace

Json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

Json zeta_to_json(const ZetaFactorization& z) {
  Json factors = Json::array();
  for (auto [m, e] : z.factors()) factors.push_back({{"m", m}, {"e", e}});
  return Json{{"factors", factors}};
}

ZetaFactorization zeta_from_json(const Json& j) {
  const Json& factors = array_field(j, "factors", "zeta");
  ZetaFactorization::Factors map;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const std::string where = "zeta factor " + std::to_string(i);
    const auto m = int_field(factors[i], "m", where);
    const auto e = int_field(factors[i], "e", where);
    if (m < 1) throw SchemaError(where + ": m must be >= 1");
    if (!map.emplace(m, e).second) throw SchemaError(where + ": repeated m = " + std::to_string(m));
  }
  return ZetaFactorization::from_factors(map);
}

std::vector<ResolutionStratum> resolution_strata_from_json(const Json& j) {
  const Json& arr = array_field(j, "strata", "strata file");
  std::vector<ResolutionStratum> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = "stratum " + std::to_string(i);
    ResolutionStratum s{int_field(arr[i], "k", where), int_field(arr[i], "l", where), int_field(arr[i], "chi", where)};
    if (s.k < 0 || s.l < 0) throw SchemaError(where + ": k and l must be non-negative");
    out.push_back(s);
  }
  return out;
}

std::vector<LocalZetaStratum> local_strata_from_json(const Json& j) {
  const Json& arr = array_field(j, "strata", "strata file");
  std::vector<LocalZetaStratum> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = "stratum " + std::to_string(i);
    try {
      out.push_back({zeta_from_json(field(arr[i], "zeta0", where)), zeta_from_json(field(arr[i], "zetaInf", where)),
                     int_field(arr[i], "chi", where)});
    } catch (const SchemaError& e) {
      throw SchemaError(where + ": " + e.what());
    }
  }
  return out;
}

Json resolution_strata_to_json(const std::vector<ResolutionStratum>& strata) {
  Json arr = Json::array();
  for (const auto& s : strata) arr.push_back({{"k", s.k}, {"l", s.l}, {"chi", s.chi}});
  return Json{{"strata", arr}};
}

Json local_strata_to_json(const std::vector<LocalZetaStratum>& strata) {
  Json arr = Json::array();
  for (const auto& s : strata) arr.push_back({{"zeta0", zeta_to_json(s.zeta0)}, {"zetaInf", zeta_to_json(s.zeta_inf)}, {"chi", s.chi}});
  return Json{{"strata", arr}};
}

Json result_to_json(const ZetaPair& z, const Json& trace, bool newton_route) {
  Json assumptions = Json::array();
  if (newton_route) assumptions.push_back("newton-nondegenerate");
  Json out{{"zeta0", zeta_to_json(z.zeta0)}, {"zetaInf", zeta_to_json(z.zeta_inf)}, {"assumptions", assumptions}};
  if (!trace.is_null()) out["trace"] = trace;
  return out;
}

ZetaPair result_from_json(const Json& j) {
  return {zeta_from_json(field(j, "zeta0", "result")), zeta_from_json(field(j, "zetaInf", "result"))};
}

Json trace_to_json(const PairTrace& trace, const VariableMap& vars) {
  Json subsets = Json::array();
  for (const auto& t : trace.subsets) {
    Json names = Json::array();
    for (auto i : t.subset.indices()) names.push_back(vars.name(i));
    Json rows = Json::array();
    for (const auto& r : t.rows) {
      Json a = Json::array();
      for (const auto& x : r.covector.a) a.push_back(integer_to_json(x));
      rows.push_back({{"a", a},
                      {"m1", integer_to_json(r.covector.m1)},
                      {"m2", integer_to_json(r.covector.m2)},
                      {"multiplicity", integer_to_json(r.multiplicity)},
                      {"side", r.side ? Json(to_string(*r.side)) : Json(nullptr)}});
    }
    subsets.push_back({{"subset", names},
                       {"l", t.subset.size()},
                       {"meets_both", t.meets_both},
                       {"covectors", rows},
                       {"zeta0", zeta_to_json(t.zeta.zeta0)},
                       {"zetaInf", zeta_to_json(t.zeta.zeta_inf)}});
  }
  return subsets;
}

PolytopeInput polytopes_from_json(const Json& j) {
  PolytopeInput in;
  const auto dim = int_field(j, "dim", "polytopes file");
  if (dim < 0) throw SchemaError("polytopes file: dim must be non-negative");
  in.dim = static_cast<std::size_t>(dim);
  const Json& arr = array_field(j, "polytopes", "polytopes file");
  if (arr.size() != in.dim) throw SchemaError("polytopes file: expected exactly dim polytopes");
  std::size_t ambient = 0;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = "polytope " + std::to_string(i);
    if (!arr[i].is_array() || arr[i].empty()) throw SchemaError(where + ": expected a non-empty array of points");
    std::vector<Point> pts;
    for (const auto& pj : arr[i]) {
      if (!pj.is_array() || pj.empty()) throw SchemaError(where + ": each point must be a non-empty integer array");
      Point p;
      for (const auto& x : pj) {
        if (!x.is_number_integer()) throw SchemaError(where + ": coordinates must be integers");
        p.emplace_back(static_cast<long>(x.get<std::int64_t>()));
      }
      if (ambient == 0) ambient = p.size();
      if (p.size() != ambient) throw SchemaError(where + ": all points must have the same dimension");
      pts.push_back(std::move(p));
    }
    in.bodies.push_back(convex_hull(pts, ambient));
  }
  return in;
}

}  // namespace nzeta
