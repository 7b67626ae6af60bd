#pragma once

#include <string>
#include <vector>

#include "fcmono/monodromy.hpp"

namespace fcmono {

/// One named identity and whether it held exactly.
struct IdentityCheck {
  std::string name;
  bool passed = false;
  std::string detail;  // failure reason, or a short note on success
};

bool all_passed(const std::vector<IdentityCheck>& checks);

/// t(M_i) H M_i^v = H for every generator and tH = (-1)^n H^v.
std::vector<IdentityCheck> check_isometries(const MonodromySystem& sys);

/// M_i M_j = M_j M_i for i, j >= 1 and, when n >= 2, (M_0 M_k)^2 = (M_k M_0)^2.
std::vector<IdentityCheck> check_relations(const MonodromySystem& sys);

/// rank(M_0 - E) = 1, det(M_0) = delta_0, M_0 e_{1..1} = delta_0 e_{1..1},
/// ker N_0 = {w : tw H e_{1..1} = 0}, the triangular shapes, and
/// det(M_k) = gamma_k^{-2^{n-1}}.
std::vector<IdentityCheck> check_reflection_structure(const MonodromySystem& sys);

/// Both constructions of f_I agree; when the irreducibility condition holds
/// the f_I form a basis and the nu matrix is invertible.
std::vector<IdentityCheck> check_basis(const MonodromySystem& sys);

/// For every I: rank(N_I) = 1, det(R_I) = delta_0, image(N_I) = C f_I and
/// ker N_I = {w : tw H f_I^v = 0}.
std::vector<IdentityCheck> check_reflections(const MonodromySystem& sys);

/// Entries of the generators and H are rational under the real-form
/// hypotheses (a + b, sum c_k integral and every c_k in Z/2).
std::vector<IdentityCheck> check_rationality(const MonodromySystem& sys);

/// Every check above.
std::vector<IdentityCheck> verify_system(const MonodromySystem& sys);

/// a + b in Z, every c_k in Z/2 and sum c_k in Z.
bool real_form_hypotheses(const ParameterSet& params);

}  // namespace fcmono
