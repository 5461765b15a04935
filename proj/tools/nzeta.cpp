// nzeta: zeta-functions of the 0- and infinity-monodromy of P/Q.
//
// Exit codes:
//   0  success
//   1  unexpected internal error
//   2  invalid input (usage, polynomial syntax, JSON schema, unreadable file)
//   3  integrality failure while assembling exponents
//   4  the two power-denominator routes disagree

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "nzeta/engine.hpp"
#include "nzeta/json_io.hpp"
#include "nzeta/lattice.hpp"
#include "nzeta/support.hpp"

using namespace nzeta;

namespace {

enum ExitCode : int { kOk = 0, kInternal = 1, kInput = 2, kIntegrality = 3, kRouteMismatch = 4 };

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RouteMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string num, den, vars, axis, file;
  std::string degree;
  bool json = false;
  bool trace = false;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

VariableMap variables(const Options& o, const std::vector<std::string>& texts) {
  try {
    return o.vars.empty() ? collect_variables(texts) : VariableMap::parse(o.vars);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("--vars: ") + e.what());
  }
}

GermSupport parse_germ(const std::string& flag, const std::string& text, const VariableMap& vars) {
  try {
    return parse_polynomial(text, vars);
  } catch (const std::exception& e) {
    throw InputError(flag + ": " + e.what());
  }
}

std::string subset_label(const CoordinateSubset& s, const VariableMap& vars) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.indices().size(); ++k) {
    if (k) out += ",";
    out += vars.name(s.indices()[k]);
  }
  return out + "}";
}

void print_trace(std::ostream& os, const PairTrace& trace, const VariableMap& vars) {
  for (const auto& t : trace.subsets) {
    os << "I = " << subset_label(t.subset, vars) << "  (l = " << t.subset.size() << ")";
    if (!t.meets_both) {
      os << ": a diagram misses L_I, factor 1\n";
      continue;
    }
    if (t.rows.empty()) {
      os << ": no essential covectors\n";
      continue;
    }
    os << "\n";
    os << "  " << std::left << std::setw(20) << "a" << std::setw(8) << "m1" << std::setw(8) << "m2" << std::setw(10)
       << "(l-1)!V_a" << "side\n";
    for (const auto& r : t.rows) {
      os << "  " << std::left << std::setw(20) << to_string(r.covector.a) << std::setw(8) << r.covector.m1.get_str()
         << std::setw(8) << r.covector.m2.get_str() << std::setw(10) << r.multiplicity.get_str()
         << (r.side ? to_string(*r.side) : "-") << "\n";
    }
  }
}

void print_result(std::ostream& os, const ZetaPair& z) {
  os << "zeta0 = " << z.zeta0.to_string() << "\n";
  os << "zetaInf = " << z.zeta_inf.to_string() << "\n";
}

void emit(const Options& o, const ZetaPair& z, const PairTrace* trace, const VariableMap* vars, bool newton_route) {
  if (o.json) {
    Json t = (o.trace && trace) ? trace_to_json(*trace, *vars) : Json(nullptr);
    std::cout << result_to_json(z, t, newton_route).dump(2) << "\n";
    return;
  }
  if (o.trace && trace) print_trace(std::cout, *trace, *vars);
  print_result(std::cout, z);
}

void cmd_pair(const Options& o) {
  auto vars = variables(o, {o.num, o.den});
  NewtonPair pair(NewtonDiagram(parse_germ("--num", o.num, vars)), NewtonDiagram(parse_germ("--den", o.den, vars)));
  auto trace = trace_newton_pair(pair);
  emit(o, trace.result, &trace, &vars, true);
}

void cmd_powerdenom(const Options& o) {
  Integer d;
  if (d.set_str(o.degree, 10) != 0 || d < 1) throw InputError("--degree must be a positive integer");
  std::vector<std::string> texts{o.num, o.axis};
  auto vars = variables(o, texts);
  const std::size_t axis = vars.index_of(o.axis);
  if (axis == vars.size()) throw InputError("--axis " + o.axis + " is not one of the variables");
  NewtonDiagram gamma(parse_germ("--num", o.num, vars));

  auto direct = zeta_power_denominator(gamma, d, axis);
  auto trace = trace_newton_pair(power_denominator_pair(gamma, d, axis));
  if (!(direct == trace.result)) {
    throw RouteMismatch("power-denominator route gives zeta0 = " + direct.zeta0.to_string() + ", zetaInf = " +
                        direct.zeta_inf.to_string() + " but the Newton-pair route gives zeta0 = " +
                        trace.result.zeta0.to_string() + ", zetaInf = " + trace.result.zeta_inf.to_string());
  }
  emit(o, direct, &trace, &vars, true);
}

void cmd_acampo(const Options& o) {
  std::vector<ResolutionStratum> strata;
  try {
    strata = resolution_strata_from_json(read_json_file(o.file));
  } catch (const SchemaError& e) {
    throw InputError(o.file + ": " + e.what());
  }
  ZetaPair z{zeta_acampo(strata, Side::Zero), zeta_acampo(strata, Side::Infinity)};
  emit(o, z, nullptr, nullptr, false);
}

void cmd_partial(const Options& o) {
  std::vector<LocalZetaStratum> strata;
  try {
    strata = local_strata_from_json(read_json_file(o.file));
  } catch (const SchemaError& e) {
    throw InputError(o.file + ": " + e.what());
  }
  emit(o, zeta_partial_resolution(strata), nullptr, nullptr, false);
}

void cmd_mixvol(const Options& o) {
  PolytopeInput in;
  try {
    in = polytopes_from_json(read_json_file(o.file));
  } catch (const SchemaError& e) {
    throw InputError(o.file + ": " + e.what());
  }
  Rational v, check;
  try {
    v = mixed_volume(in.bodies, in.dim);
    check = mixed_volume_oracle(in.bodies, in.dim);
  } catch (const DimensionError& e) {
    throw InputError(o.file + ": " + e.what());
  }
  if (v != check) throw RouteMismatch("mixed volume " + to_string(v) + " disagrees with inclusion-exclusion " + to_string(check));
  if (o.json) {
    std::cout << Json{{"mixed_volume", to_string(v)}, {"oracle", to_string(check)}}.dump(2) << "\n";
  } else {
    std::cout << to_string(v) << " (oracle: " << to_string(check) << ")\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zeta-functions of the 0- and infinity-monodromy of a meromorphic germ P/Q"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "Emit JSON instead of text");
  };

  auto* pair = app.add_subcommand("pair", "Zeta-functions from the Newton pair of P/Q");
  pair->add_option("--num", o.num, "Numerator P")->required();
  pair->add_option("--den", o.den, "Denominator Q")->required();
  pair->add_option("--vars", o.vars, "Comma-separated variables, fixing the coordinate order");
  pair->add_flag("--trace", o.trace, "Print the covector table of every coordinate subset");
  common(pair);

  auto* powerdenom = app.add_subcommand("powerdenom", "Zeta-functions of P / axis^degree, checked against the pair route");
  powerdenom->add_option("--num", o.num, "Numerator P")->required();
  powerdenom->add_option("--degree", o.degree, "Exponent d of the denominator")->required();
  powerdenom->add_option("--axis", o.axis, "Variable of the denominator")->required();
  powerdenom->add_option("--vars", o.vars, "Comma-separated variables, fixing the coordinate order");
  powerdenom->add_flag("--trace", o.trace, "Print the covector table of every coordinate subset");
  common(powerdenom);

  auto* acampo = app.add_subcommand("acampo", "Zeta-functions from resolution strata {k, l, chi}");
  acampo->add_option("file", o.file, "Strata JSON file")->required();
  common(acampo);

  auto* partial = app.add_subcommand("partial", "Zeta-functions from partial-resolution strata");
  partial->add_option("file", o.file, "Strata JSON file")->required();
  common(partial);

  auto* mixvol = app.add_subcommand("mixvol", "Mixed volume of lattice polytopes (with inclusion-exclusion check)");
  mixvol->add_option("file", o.file, "Polytopes JSON file")->required();
  common(mixvol);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (pair->parsed()) cmd_pair(o);
    if (powerdenom->parsed()) cmd_powerdenom(o);
    if (acampo->parsed()) cmd_acampo(o);
    if (partial->parsed()) cmd_partial(o);
    if (mixvol->parsed()) cmd_mixvol(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const IntegralityError& e) {
    std::cerr << "integrality failure: " << e.what() << "\n";
    return kIntegrality;
  } catch (const RouteMismatch& e) {
    std::cerr << "route mismatch: " << e.what() << "\n";
    return kRouteMismatch;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}
