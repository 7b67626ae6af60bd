#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fcmono/cyclotomic.hpp"
#include "fcmono/matrix.hpp"

namespace fcmono {

/// G_k = [[1, -1/gamma], [0, 1/gamma]].
ExactMatrix build_Gk(const CycNum& gamma);
/// G_k^{-1} = [[1, 1], [0, gamma]].
ExactMatrix build_Gk_inverse(const CycNum& gamma);

/// M_k = E (x) ... (x) G_k (x) ... (x) E with G_k in slot k (1-based).
ExactMatrix build_Mk(std::size_t n, std::size_t k, const CycNum& gamma);

/// Last row of N_0, indexed by linear rank.
Vector build_v(const UnitRoots& roots);
Vector build_v(const ParameterSet& params);

/// M_0 = E - N_0, where N_0 is zero except for its last row, which is v.
ExactMatrix build_M0(const UnitRoots& roots);
ExactMatrix build_M0(const ParameterSet& params);

/// The intersection matrix. Throws UndefinedObject when alpha equals the
/// product of all gamma_k or beta = 1.
ExactMatrix build_H(const UnitRoots& roots);
ExactMatrix build_H(const ParameterSet& params);

/// The condition under which H is undefined, or nullopt when it is defined.
std::optional<std::string> h_undefined_reason(const UnitRoots& roots);

/// (-1)^{n+1} gamma_1 ... gamma_n / (alpha beta).
CycNum delta0_formula(const UnitRoots& roots);

/// Generators, intersection form and the objects derived from them.
struct MonodromySystem {
  ParameterSet params;
  UnitRoots roots;
  std::size_t n = 0;
  std::size_t size = 0;  // 2^n
  std::vector<ExactMatrix> M;  // M_0, ..., M_n
  Vector v;
  ExactMatrix N0;
  CycNum delta0;
  std::optional<ExactMatrix> H;
  std::optional<std::string> h_undefined;  // why H is missing

  const ExactMatrix& require_H() const;
};

/// Largest n accepted by build_system; the matrices have size 2^n.
inline constexpr std::size_t kMaxTensorFactors = 8;

/// Builds the full system. H is left empty (with the reason recorded)
/// when it is undefined; every other object always exists.
/// Throws PreconditionError when det(M_0) disagrees with the closed form.
MonodromySystem build_system(const ParameterSet& params);

/// M^I = M_1^{i_1} ... M_n^{i_n}.
ExactMatrix word_power(const MonodromySystem& sys, const IndexWord& word);
/// (M^I)^{-1}, assembled from the factor inverses.
ExactMatrix word_power_inverse(const MonodromySystem& sys, const IndexWord& word);

/// f_I = (G_1^{i_1} e_1) (x) ... (x) (G_n^{i_n} e_1).
Vector build_fI(const MonodromySystem& sys, const IndexWord& word);
/// f_I computed as M^I e_{1...1}.
Vector build_fI_by_action(const MonodromySystem& sys, const IndexWord& word);

struct ReflectionGen {
  IndexWord word;
  ExactMatrix R;  // M^I M_0 (M^I)^{-1}
  ExactMatrix N;  // E - R
  Vector f;
};

ReflectionGen build_reflection(const MonodromySystem& sys, const IndexWord& word);
std::vector<ReflectionGen> all_reflections(const MonodromySystem& sys);

/// The linear form w -> coefficient of N_I w along f_I, i.e. the row
/// v^T (M^I)^{-1}.
Vector nu_row(const MonodromySystem& sys, const IndexWord& word);
/// Square matrix whose row rank(I) is nu_row(I); it is the matrix of
/// w -> (N_I w)_I in the coordinates given by the f_I.
ExactMatrix nu_matrix(const MonodromySystem& sys);

}  // namespace fcmono
