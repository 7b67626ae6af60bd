#include "fcmono/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "fcmono/classification.hpp"
#include "fcmono/errors.hpp"
#include "fcmono/identities.hpp"
#include "fcmono/monodromy.hpp"
#include "fcmono/numerics.hpp"
#include "fcmono/serialize.hpp"
#include "fcmono/special_models.hpp"
#include "fcmono/structure.hpp"

namespace fcmono {

namespace {

struct ParamFlags {
  std::string a, b, c;
};

void add_param_flags(CLI::App* cmd, ParamFlags& f) {
  cmd->add_option("--a", f.a, "exponent a as p/q")->required();
  cmd->add_option("--b", f.b, "exponent b as p/q")->required();
  cmd->add_option("--c", f.c, "exponents c_1,...,c_n as p/q values")->required();
}

ParameterSet parse_params(const ParamFlags& f) {
  ParameterSet p = ParameterSet::parse(f.a, f.b, f.c);
  p.validate();
  return p;
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

double parse_double(const std::string& text) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ParseError("not a number: '" + text + "'");
  }
  if (used != text.size()) throw ParseError("not a number: '" + text + "'");
  return v;
}

std::size_t default_budget() {
  const char* env = std::getenv("FCMONO_ENUM_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultEnumBudget;
  const std::string text(env);
  if (text.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("FCMONO_ENUM_BUDGET must be a positive integer");
  const unsigned long long v = std::stoull(text);
  if (v == 0) throw ParseError("FCMONO_ENUM_BUDGET must be a positive integer");
  return static_cast<std::size_t>(v);
}

Json complex_to_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

// The command's JSON result and its exit code.
struct Outcome {
  Json body;
  int code = kExitPass;
};

Outcome cmd_generate(const ParamFlags& f, std::ostream& err) {
  const MonodromySystem sys = build_system(parse_params(f));
  Outcome o{system_to_json(sys)};
  if (sys.h_undefined) {
    err << "error: intersection matrix undefined: " << *sys.h_undefined << "\n";
    o.code = kExitUndefined;
  }
  return o;
}

Outcome cmd_verify(const ParamFlags& f, std::ostream& err) {
  const ParameterSet p = parse_params(f);
  const MonodromySystem sys = build_system(p);
  const auto checks = verify_system(sys);
  const bool ok = all_passed(checks);
  Outcome o{Json{{"params", params_to_json(p)}, {"checks", checks_to_json(checks)}, {"passed", ok}}};
  if (sys.h_undefined) {
    err << "error: intersection matrix undefined: " << *sys.h_undefined << "\n";
    o.code = kExitUndefined;
  } else if (!ok) {
    o.code = kExitIdentityFailure;
  }
  return o;
}

std::vector<ExactMatrix> select_generators(const MonodromySystem& sys, const std::string& which) {
  if (which == "mon") return monodromy_generators(sys);
  if (which == "ref") return reflection_generators(sys);
  std::vector<ExactMatrix> out;
  for (const auto& item : split(which)) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("--generators takes mon, ref or a list of indices 0..n");
    const std::size_t k = std::stoul(item);
    if (k > sys.n) throw ParseError("generator index " + item + " exceeds n");
    out.push_back(sys.M[k]);
  }
  return out;
}

Outcome cmd_classify(const ParamFlags& f, const std::string& hint_name, std::size_t budget) {
  const ParameterSet p = parse_params(f);
  FinitenessHint hint;
  if (hint_name == "infinite") {
    hint = FinitenessHint::infinite_assumed();
  } else if (hint_name == "enumerate") {
    hint = FinitenessHint::from_enumeration(
        enumerate_group(monodromy_generators(build_system(p)), budget));
  } else if (hint_name != "none") {
    throw ParseError("--hint takes none, infinite or enumerate");
  }
  const ClassificationReport r = classify(p, hint);
  Json body{{"params", params_to_json(p)}, {"hint", hint_name}, {"report", report_to_json(r)}};
  Json warnings = Json::array();
  if (r.verdict == Verdict::reducible)
    warnings.push_back("Mon is reducible: " + r.steps.back());
  for (const auto& a : r.assumptions_used) warnings.push_back("assumption used: " + a);
  body["warnings"] = warnings;
  return Outcome{body};
}

Outcome cmd_witness(const ParamFlags& f) {
  const ParameterSet p = parse_params(f);
  const MonodromySystem sys = build_system(p);
  const ReducibleWitness w = build_reducible_witness(sys);
  const auto checks = verify_witness(sys, w);
  const bool ok = all_passed(checks);
  return Outcome{Json{{"params", params_to_json(p)},
                      {"witness", witness_to_json(w)},
                      {"checks", checks_to_json(checks)},
                      {"passed", ok}},
                 ok ? kExitPass : kExitIdentityFailure};
}

Outcome cmd_enumerate(const ParamFlags& f, const std::string& which, std::size_t budget) {
  const ParameterSet p = parse_params(f);
  const MonodromySystem sys = build_system(p);
  Json probes = Json::array();
  for (std::size_t k = 1; k <= sys.n; ++k) {
    Json probe = probe_to_json(conjugate_orbit_probe(sys, k, budget));
    probe["k"] = k;
    probes.push_back(probe);
  }
  const GroupEnumeration e = enumerate_group(select_generators(sys, which), budget);
  return Outcome{Json{{"params", params_to_json(p)},
                      {"generators", which},
                      {"budget", budget},
                      {"group", enumeration_to_json(e)},
                      {"order_probes", probes}}};
}

Outcome cmd_special(int n, const std::string& check) {
  static const std::vector<std::string> kChecks{"all", "change-of-basis", "segre", "moebius",
                                                "gamma2"};
  if (std::find(kChecks.begin(), kChecks.end(), check) == kChecks.end())
    throw ParseError("--check takes all, change-of-basis, segre, moebius or gamma2");
  const IntegerModel model = load_fixture(n);
  const bool all = check == "all";
  if (n != 2 && !all && check != "change-of-basis")
    throw PreconditionError("the " + check + " check needs --n 2");

  Json checks = Json::object();
  Json controls = Json::object();
  bool ok = true;
  auto record = [&](const std::string& key, const std::vector<IdentityCheck>& c) {
    checks[key] = checks_to_json(c);
    ok = ok && all_passed(c);
  };
  if (all || check == "change-of-basis") {
    record("change_of_basis", verify_change_of_basis(model));
    IntegerModel bad = model;
    bad.M_prime[1](0, 0) += CycNum(1);
    const auto c = verify_change_of_basis(bad);
    std::string detail;
    bool detected = false;
    for (const auto& x : c)
      if (x.name == "M'_1 = P^-1 M_1 P") {
        detail = x.detail;
        detected = !x.passed;
      }
    controls["change_of_basis"] =
        Json{{"perturbation", "M'_1 entry (1,1) increased by 1"}, {"detected", detected},
             {"detail", detail}};
    ok = ok && detected;
  }
  if (n == 2 && (all || check == "segre")) {
    const Polynomial q = segre_quadric(model.H_prime);
    const std::vector<std::string> names{"s0", "s1", "t0", "t1"};
    checks["segre_quadric"] =
        Json{{"name", "(s0t0, s0t1, s1t0, s1t1) H' t(...) = 0"}, {"passed", q.is_zero()},
             {"polynomial", q.to_string(names)}};
    ok = ok && q.is_zero();
    const Polynomial control = segre_quadric(ExactMatrix::identity(4));
    controls["segre_quadric"] = Json{{"perturbation", "H' replaced by the identity"},
                                     {"detected", !control.is_zero()},
                                     {"detail", control.to_string(names)}};
    ok = ok && !control.is_zero();
  }
  if (n == 2 && (all || check == "moebius")) record("moebius_action", moebius_action_check(model));
  if (n == 2 && (all || check == "gamma2"))
    record("gamma2_generators", gamma2_generator_check(model));
  return Outcome{Json{{"n", n}, {"check", check}, {"checks", checks},
                      {"negative_controls", controls}, {"passed", ok}},
                 ok ? kExitPass : kExitIdentityFailure};
}

struct EvalFlags {
  std::string x;
  std::string method = "series";
  double epsilon = 0.2;
  int points = 64;
  int max_degree = 2000;
  double rel_tol = 1e-16;
};

Outcome cmd_eval(const ParamFlags& f, const EvalFlags& e) {
  const ParameterSet p = parse_params(f);
  const RealParameters rp = RealParameters::from(p);
  std::vector<double> x;
  for (const auto& item : split(e.x)) x.push_back(parse_double(item));
  if (x.size() != p.n()) throw ParseError("--x needs one value per c_k");
  if (e.method != "series" && e.method != "contour" && e.method != "both")
    throw ParseError("--method takes series, contour or both");

  Json body{{"params", params_to_json(p)}, {"x", x}, {"method", e.method}};
  std::optional<Complex> series, contour;
  if (e.method != "contour") {
    std::vector<Complex> xc(x.begin(), x.end());
    const SeriesResult r = fc_series(rp, xc, {e.max_degree, e.rel_tol});
    series = r.value;
    body["series"] = Json{{"value", complex_to_json(r.value)},
                          {"error_estimate", r.error_estimate},
                          {"degree", r.degree},
                          {"terms", r.terms}};
  }
  if (e.method != "series") {
    const ContourResult r = fc_contour(rp, x, {e.epsilon, e.points});
    contour = r.value;
    body["contour"] = Json{{"value", complex_to_json(r.value)},
                           {"prefactor", complex_to_json(r.prefactor)},
                           {"error_estimate", r.error_estimate},
                           {"epsilon", e.epsilon},
                           {"points_per_circle", e.points},
                           {"points", r.points}};
  }
  if (series && contour) body["difference"] = std::abs(*series - *contour);
  return Outcome{body};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monodromy of Lauricella's F_C: exact construction, verification, classification"};
  app.name("fcmono");
  app.require_subcommand(1);
  std::string out_path;
  ParamFlags flags;
  std::string generators = "mon", hint = "none";
  std::size_t budget = 0;
  int model_n = 2;
  std::string check = "all";
  EvalFlags eval;

  auto* generate = app.add_subcommand("generate", "build M_0..M_n, H and derived objects");
  auto* verify = app.add_subcommand("verify", "check every identity exactly");
  auto* classify_cmd = app.add_subcommand("classify", "classify the Zariski closure");
  auto* witness = app.add_subcommand("witness", "build and check a reducibility witness");
  auto* enumerate = app.add_subcommand("enumerate", "finiteness probes and group closure");
  auto* special = app.add_subcommand("special", "integral models for a = b = 1/2, c = 1");
  auto* evaluate = app.add_subcommand("eval", "evaluate F_C by series and torus contour");
  for (auto* cmd : {generate, verify, classify_cmd, witness, enumerate, evaluate})
    add_param_flags(cmd, flags);
  for (auto* cmd : {generate, verify, classify_cmd, witness, enumerate, special, evaluate})
    cmd->add_option("--out", out_path, "write the JSON to this file instead of stdout");
  classify_cmd->add_option("--hint", hint, "finiteness hint: none, infinite or enumerate");
  classify_cmd->add_option("--budget", budget, "enumeration budget for --hint enumerate");
  enumerate->add_option("--generators", generators, "mon, ref, or indices such as 1 or 0,2");
  enumerate->add_option("--budget", budget, "stop after this many group elements");
  special->add_option("--n", model_n, "2 or 3")->required();
  special->add_option("--check", check, "all, change-of-basis, segre, moebius or gamma2");
  evaluate->add_option("--x", eval.x, "x_1,...,x_n")->required();
  evaluate->add_option("--method", eval.method, "series, contour or both");
  evaluate->add_option("--epsilon", eval.epsilon, "torus radius");
  evaluate->add_option("--points", eval.points, "quadrature points per circle");
  evaluate->add_option("--max-degree", eval.max_degree, "series truncation limit");
  evaluate->add_option("--rel-tol", eval.rel_tol, "series stopping tolerance");

  std::vector<const char*> argv{"fcmono"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  Outcome outcome;
  try {
    if (budget == 0) budget = default_budget();
    if (*generate) outcome = cmd_generate(flags, err);
    else if (*verify) outcome = cmd_verify(flags, err);
    else if (*classify_cmd) outcome = cmd_classify(flags, hint, budget);
    else if (*witness) outcome = cmd_witness(flags);
    else if (*enumerate) outcome = cmd_enumerate(flags, generators, budget);
    else if (*special) outcome = cmd_special(model_n, check);
    else outcome = cmd_eval(flags, eval);
  } catch (const UndefinedObject& e) {
    err << "error: " << e.what() << "\n";
    return kExitUndefined;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DimensionMismatch& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitIdentityFailure;
  }

  const std::string text = dump(outcome.body);
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << out_path << "\n";
      return kExitUsage;
    }
    file << text;
  }
  return outcome.code;
}

}  // namespace fcmono
