#include "fcmono/classification.hpp"

#include <algorithm>

#include "fcmono/identities.hpp"
#include "fcmono/monodromy.hpp"

namespace fcmono {

namespace {

void cite(ClassificationReport& r, const std::string& label) {
  if (std::find(r.citations.begin(), r.citations.end(), label) == r.citations.end())
    r.citations.push_back(label);
}

void assume(ClassificationReport& r, const std::string& name) {
  if (std::find(r.assumptions_used.begin(), r.assumptions_used.end(), name) ==
      r.assumptions_used.end())
    r.assumptions_used.push_back(name);
}

std::string describe_failure(const IrrFailure& f) {
  return f.which + " = prod gamma_k^{i_k} for I=(" + f.word.to_string() + ")";
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::SL_contained: return "SL_contained";
    case Verdict::Sp_between: return "Sp_between";
    case Verdict::SO_between: return "SO_between";
    case Verdict::definite_O: return "definite_O";
    case Verdict::definite_Sp: return "definite_Sp";
    case Verdict::finite: return "finite";
    case Verdict::reducible: return "reducible";
    case Verdict::undetermined: return "undetermined";
  }
  return "undetermined";
}

std::string to_string(Delta0Case c) {
  switch (c) {
    case Delta0Case::I: return "I";
    case Delta0Case::II: return "II";
    case Delta0Case::III: return "III";
  }
  return "I";
}

std::string to_string(HintKind k) {
  switch (k) {
    case HintKind::none: return "none";
    case HintKind::infinite_assumed: return "infinite_assumed";
    case HintKind::enumeration_result: return "enumeration_result";
  }
  return "none";
}

std::string to_string(FormParity p) {
  switch (p) {
    case FormParity::none: return "none";
    case FormParity::symmetric: return "symmetric";
    case FormParity::alternating: return "alternating";
  }
  return "none";
}

namespace {

Delta0Case case_of(const CycNum& d) {
  if (d == CycNum(1)) return Delta0Case::II;
  if (d == CycNum(-1)) return Delta0Case::III;
  return Delta0Case::I;
}

}  // namespace

Delta0Case delta0_case(const ParameterSet& params) {
  params.validate();
  return case_of(delta0_formula(unit_roots(params)));
}

bool sl_determinant_note(const ParameterSet& params) {
  params.validate();
  return true;
}

std::optional<std::string> infinite_certificate(const ParameterSet& params) {
  params.validate();
  const UnitRoots roots = unit_roots(params);
  if (delta0_formula(roots) == CycNum(1))
    return std::string("delta0 = 1, so M0 is a transvection of infinite order");
  for (std::size_t k = 0; k < roots.gamma.size(); ++k)
    if (roots.gamma[k] == CycNum(1))
      return "gamma_" + std::to_string(k + 1) + " = 1, so M" + std::to_string(k + 1) +
             " is unipotent of infinite order";
  return std::nullopt;
}

FormParity verified_invariant_form(const MonodromySystem& sys) {
  if (!sys.H) return FormParity::none;
  const ExactMatrix& H = *sys.H;
  for (const auto& m : sys.M)
    if (!(m.involution() == m)) return FormParity::none;
  if (rank(H) != sys.size) return FormParity::none;
  for (const auto& m : sys.M)
    if (!(m.transpose() * H * m == H)) return FormParity::none;
  const ExactMatrix t = H.transpose();
  if (t == H) return FormParity::symmetric;
  if (t == -H) return FormParity::alternating;
  return FormParity::none;
}

ClassificationReport classify(const ParameterSet& params, const FinitenessHint& hint) {
  params.validate();
  ClassificationReport r;
  const std::size_t n = params.n();
  const UnitRoots roots = unit_roots(params);
  r.delta0 = delta0_formula(roots);
  r.delta0_case = case_of(r.delta0);
  r.sl_determinant_note = sl_determinant_note(params);
  r.real_form = real_form_hypotheses(params);

  // (1) Irreducibility of Mon.
  r.irreducibility = check_irr(params);
  cite(r, "prop-irr");
  if (r.irreducibility.mon_irreducible == Tri::fails) {
    r.steps.push_back("irr-alpha-beta-gamma fails: " +
                      describe_failure(r.irreducibility.failures.front()));
    r.verdict = Verdict::reducible;
    return r;
  }
  r.steps.push_back("irr-alpha-beta-gamma holds: Mon acts irreducibly");

  // (2) Irreducibility of Ref.
  cite(r, "main2");
  const bool ref_irreducible = r.irreducibility.ref_irreducible == Tri::holds;
  r.steps.push_back(
      ref_irreducible
          ? "at most one of gamma_1..gamma_n, alpha/beta is -1: Ref acts irreducibly"
          : "two or more of gamma_1..gamma_n, alpha/beta are -1: Ref is reducible");

  // Finiteness of Mon.
  if (hint.kind == HintKind::enumeration_result && hint.enumeration &&
      hint.enumeration->complete) {
    r.mon_infinite = Tri::fails;
    r.mon_infinite_reason =
        "enumeration closed with " + std::to_string(hint.enumeration->element_count) + " elements";
    r.steps.push_back("Mon is finite: " + r.mon_infinite_reason);
    r.verdict = Verdict::finite;
    return r;
  }
  bool infinite_usable = false;
  if (auto cert = infinite_certificate(params)) {
    r.mon_infinite = Tri::holds;
    r.mon_infinite_reason = *cert;
    infinite_usable = true;
    r.steps.push_back("Mon is infinite: " + *cert);
  } else if (hint.kind == HintKind::infinite_assumed) {
    r.mon_infinite_reason = "assumed by the caller";
    assume(r, "Mon infinite");
    infinite_usable = true;
    r.steps.push_back("Mon infinite taken as an assumption");
  } else if (hint.kind == HintKind::enumeration_result && hint.enumeration) {
    r.mon_infinite_reason = "enumeration budget exceeded";
    assume(r, "Mon infinite (enumeration budget exceeded)");
    infinite_usable = true;
    r.steps.push_back("Mon infinite taken as a heuristic assumption: enumeration budget exceeded");
  }

  // (3) Irreducibility of Mon^0.
  if (ref_irreducible && infinite_usable) {
    cite(r, "main3-cor");
    r.mon0_irreducible = Tri::holds;
    r.steps.push_back("Ref irreducible and Mon infinite: Mon0 acts irreducibly");
  }
  if (ref_irreducible) {
    cite(r, "main3");
    r.notes.push_back(
        "if Ref0 were reducible, Ref and hence Mon would be finite; Ref0 reducibility is "
        "not decided here");
  }
  const bool mon0_justified = r.mon0_irreducible == Tri::holds;

  // (4) Trichotomy on delta0.
  cite(r, "main");
  r.steps.push_back("delta0 = " + r.delta0.to_string() + ": case " + to_string(r.delta0_case));
  FormParity form = FormParity::none;
  if (r.delta0_case != Delta0Case::I || r.real_form) {
    const MonodromySystem sys = build_system(params);
    form = verified_invariant_form(sys);
  }
  r.invariant_form = form;
  switch (r.delta0_case) {
    case Delta0Case::I:
      r.verdict = Verdict::SL_contained;
      break;
    case Delta0Case::II:
      r.verdict = form == FormParity::alternating ? Verdict::Sp_between : Verdict::undetermined;
      if (form != FormParity::alternating)
        r.notes.push_back("case II leaves SL_contained or Sp_between open");
      break;
    case Delta0Case::III:
      r.verdict = form == FormParity::symmetric ? Verdict::SO_between : Verdict::undetermined;
      if (form != FormParity::symmetric)
        r.notes.push_back("case III leaves SL_contained or SO_between open");
      break;
  }
  if (form != FormParity::none)
    r.steps.push_back("generators preserve the " + to_string(form) + " form H exactly");

  // (5) Definite closure under the real-form hypotheses.
  if (r.real_form) {
    cite(r, "cor-main");
    const CycNum expected = n % 2 == 1 ? CycNum(1) : CycNum(-1);
    const FormParity parity = n % 2 == 0 ? FormParity::symmetric : FormParity::alternating;
    const bool exact = r.delta0 == expected && form == parity;
    if (mon0_justified && exact) {
      r.verdict = n % 2 == 0 ? Verdict::definite_O : Verdict::definite_Sp;
      r.steps.push_back(std::string("a + b, 2 c_k, sum c_k integral and Mon0 irreducible: "
                                    "closure is ") +
                        (n % 2 == 0 ? "O" : "Sp"));
    } else if (!mon0_justified) {
      r.verdict = Verdict::undetermined;
      r.notes.push_back("the closure is " + std::string(n % 2 == 0 ? "O" : "Sp") +
                        " once Mon0 irreducibility is justified (for example, Mon infinite)");
    }
    return r;
  }
  if (!mon0_justified) assume(r, "Mon0 irreducible");
  return r;
}

}  // namespace fcmono
