#include "fcmono/serialize.hpp"

#include "fcmono/errors.hpp"

namespace fcmono {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t size_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw ParseError(std::string("field '") + key + "' must be a nonnegative integer");
  return v.get<std::size_t>();
}

Json strings(const std::vector<std::string>& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s);
  return out;
}

Json vectors_to_json(const std::vector<Vector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(vector_to_json(v));
  return out;
}

}  // namespace

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("rational must be a \"p/q\" string or an integer");
}

Json cycnum_to_json(const CycNum& x) {
  const CycNum c = x.canonical();
  Json coeffs = Json::array();
  for (const auto& q : c.power_basis_coeffs()) coeffs.push_back(rational_to_json(q));
  return Json{{"N", c.conductor()}, {"coeffs", coeffs}};
}

CycNum cycnum_from_json(const Json& j) {
  const std::size_t n = size_field(j, "N");
  if (n == 0) throw ParseError("conductor N must be positive");
  const Json& c = field(j, "coeffs");
  if (!c.is_array()) throw ParseError("coeffs must be an array");
  std::vector<Rational> coeffs;
  for (const auto& e : c) coeffs.push_back(rational_from_json(e));
  return CycNum::from_power_basis(n, coeffs);
}

Json matrix_to_json(const ExactMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(cycnum_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

ExactMatrix matrix_from_json(const Json& j) {
  const std::size_t rows = size_field(j, "rows");
  const std::size_t cols = size_field(j, "cols");
  const Json& e = field(j, "entries");
  if (!e.is_array() || e.size() != rows) throw ParseError("entries must have 'rows' rows");
  ExactMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!e[r].is_array() || e[r].size() != cols)
      throw ParseError("row " + std::to_string(r) + " must have 'cols' entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = cycnum_from_json(e[r][c]);
  }
  return m;
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(cycnum_to_json(x));
  return out;
}

Json params_to_json(const ParameterSet& p) {
  Json c = Json::array();
  for (const auto& q : p.c) c.push_back(rational_to_json(q));
  return Json{{"a", rational_to_json(p.a)}, {"b", rational_to_json(p.b)}, {"c", c}};
}

Json system_to_json(const MonodromySystem& sys) {
  Json gamma = Json::array();
  for (const auto& g : sys.roots.gamma) gamma.push_back(cycnum_to_json(g));
  Json M = Json::array();
  for (const auto& m : sys.M) M.push_back(matrix_to_json(m));
  Json out{{"params", params_to_json(sys.params)},
           {"n", sys.n},
           {"size", sys.size},
           {"conductor", sys.roots.conductor},
           {"alpha", cycnum_to_json(sys.roots.alpha)},
           {"beta", cycnum_to_json(sys.roots.beta)},
           {"gamma", gamma},
           {"delta0", cycnum_to_json(sys.delta0)},
           {"v", vector_to_json(sys.v)},
           {"N0", matrix_to_json(sys.N0)},
           {"M", M}};
  out["H"] = sys.H ? matrix_to_json(*sys.H) : Json(nullptr);
  out["H_undefined"] = sys.h_undefined ? Json(*sys.h_undefined) : Json(nullptr);
  return out;
}

Json checks_to_json(const std::vector<IdentityCheck>& checks) {
  Json out = Json::array();
  for (const auto& c : checks)
    out.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return out;
}

Json irreducibility_to_json(const IrreducibilityVerdict& v) {
  Json failures = Json::array();
  for (const auto& f : v.failures)
    failures.push_back(Json{{"which", f.which}, {"word", f.word.to_string()}});
  return Json{{"mon_irreducible", to_string(v.mon_irreducible)},
              {"failures", failures},
              {"ref_irreducible", to_string(v.ref_irreducible)},
              {"minus_one_members", strings(v.minus_one_members)}};
}

Json report_to_json(const ClassificationReport& r) {
  return Json{{"verdict", to_string(r.verdict)},
              {"delta0_case", to_string(r.delta0_case)},
              {"delta0", cycnum_to_json(r.delta0)},
              {"assumptions_used", strings(r.assumptions_used)},
              {"citations", strings(r.citations)},
              {"steps", strings(r.steps)},
              {"notes", strings(r.notes)},
              {"irreducibility", irreducibility_to_json(r.irreducibility)},
              {"mon_infinite", to_string(r.mon_infinite)},
              {"mon_infinite_reason", r.mon_infinite_reason},
              {"mon0_irreducible", to_string(r.mon0_irreducible)},
              {"real_form", r.real_form},
              {"invariant_form", to_string(r.invariant_form)},
              {"sl_determinant_note", r.sl_determinant_note}};
}

Json witness_to_json(const ReducibleWitness& w) {
  Json lambdas = Json::array();
  for (const auto& l : w.lambda_table)
    lambdas.push_back(Json{{"label", l.label},
                           {"basis_word", l.basis_word.to_string()},
                           {"value", cycnum_to_json(l.value)},
                           {"matches_M0", l.matches_M0}});
  Json out{{"kind", to_string(w.kind)},
           {"k1", w.k1},
           {"W_plus", vectors_to_json(w.W_plus)},
           {"W_minus", vectors_to_json(w.W_minus)},
           {"lambda_table", lambdas}};
  out["k2"] = w.k2 == 0 ? Json(nullptr) : Json(w.k2);
  return out;
}

Json enumeration_to_json(const GroupEnumeration& e) {
  Json out{{"status", e.complete ? "complete" : "budget_exceeded"}};
  out["order"] = e.complete ? Json(e.element_count) : Json(nullptr);
  if (!e.complete) out["elements_found"] = e.element_count;
  return out;
}

Json probe_to_json(const OrderProbe& p) {
  Json out{{"status", p.finite ? "finite" : "budget_exceeded"}, {"powers_tried", p.powers_tried}};
  out["order"] = p.finite ? Json(p.order) : Json(nullptr);
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace fcmono
