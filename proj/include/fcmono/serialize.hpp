#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "fcmono/classification.hpp"
#include "fcmono/cyclotomic.hpp"
#include "fcmono/identities.hpp"
#include "fcmono/matrix.hpp"
#include "fcmono/monodromy.hpp"
#include "fcmono/structure.hpp"

namespace fcmono {

/// Objects are std::map backed, so keys are always emitted sorted.
using Json = nlohmann::json;

/// "p/q", or "p" for integers.
Json rational_to_json(const Rational& q);
/// Accepts a "p/q" string or a JSON integer.
Rational rational_from_json(const Json& j);

/// {"N": conductor, "coeffs": [...]} in the power basis of the minimal
/// conductor, reduced modulo Phi_N.
Json cycnum_to_json(const CycNum& x);
/// Accepts any conductor and any number of power-basis coefficients.
CycNum cycnum_from_json(const Json& j);

/// {"rows": r, "cols": c, "entries": [[CycNum, ...], ...]}.
Json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const Json& j);

Json vector_to_json(const Vector& v);

/// {"a": "p/q", "b": "p/q", "c": ["p/q", ...]}.
Json params_to_json(const ParameterSet& p);

Json system_to_json(const MonodromySystem& sys);
Json checks_to_json(const std::vector<IdentityCheck>& checks);
Json irreducibility_to_json(const IrreducibilityVerdict& v);
Json report_to_json(const ClassificationReport& r);
Json witness_to_json(const ReducibleWitness& w);
Json enumeration_to_json(const GroupEnumeration& e);
Json probe_to_json(const OrderProbe& p);

/// Two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace fcmono
