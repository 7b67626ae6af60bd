#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fcmono/cyclotomic.hpp"
#include "fcmono/structure.hpp"

namespace fcmono {

enum class Verdict {
  SL_contained,  // SL_{2^n} inside the Zariski closure
  Sp_between,    // Sp inside the closure inside GSp
  SO_between,    // SO inside the closure inside GO
  definite_O,
  definite_Sp,
  finite,
  reducible,
  undetermined,
};
std::string to_string(Verdict v);

/// I: delta0 != +-1, II: delta0 = +1, III: delta0 = -1.
enum class Delta0Case { I, II, III };
std::string to_string(Delta0Case c);

enum class HintKind { none, infinite_assumed, enumeration_result };
std::string to_string(HintKind k);

struct FinitenessHint {
  HintKind kind = HintKind::none;
  /// Required when kind == enumeration_result.
  std::optional<GroupEnumeration> enumeration;

  static FinitenessHint none() { return {}; }
  static FinitenessHint infinite_assumed() { return {HintKind::infinite_assumed, std::nullopt}; }
  static FinitenessHint from_enumeration(const GroupEnumeration& e) {
    return {HintKind::enumeration_result, e};
  }
};

/// An invariant nondegenerate bilinear form on the generators, when one is
/// verified exactly: tM H M = H for every generator.
enum class FormParity { none, symmetric, alternating };
std::string to_string(FormParity p);

struct ClassificationReport {
  Verdict verdict = Verdict::undetermined;
  Delta0Case delta0_case = Delta0Case::I;
  CycNum delta0;
  std::vector<std::string> assumptions_used;
  std::vector<std::string> citations;  // theorem labels, in the order applied
  std::vector<std::string> steps;      // one line per applied step
  std::vector<std::string> notes;      // conditional statements not evaluated

  IrreducibilityVerdict irreducibility;
  Tri mon_infinite = Tri::unknown;
  std::string mon_infinite_reason;
  Tri mon0_irreducible = Tri::unknown;
  /// Cor-main hypotheses: a + b in Z, c_k in Z/2, sum c_k in Z.
  bool real_form = false;
  FormParity invariant_form = FormParity::none;
  bool sl_determinant_note = true;
};

/// Zariski-closure classification from the parameter criteria.
ClassificationReport classify(const ParameterSet& params,
                              const FinitenessHint& hint = FinitenessHint::none());

Delta0Case delta0_case(const ParameterSet& params);

/// Mon^0 lies in SL when a, b and every c_k are rational, which holds for
/// every exact parameter set.
bool sl_determinant_note(const ParameterSet& params);

/// Exact certificate that Mon is infinite: a generator is unipotent and not
/// the identity (delta0 = 1, or some gamma_k = 1). Returns the reason.
std::optional<std::string> infinite_certificate(const ParameterSet& params);

/// Parity of H when every generator is real (M^v = M), H is nondegenerate,
/// tM H M = H holds exactly, and tH = +-H.
FormParity verified_invariant_form(const MonodromySystem& sys);

}  // namespace fcmono
