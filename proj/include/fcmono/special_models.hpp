#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fcmono/identities.hpp"
#include "fcmono/matrix.hpp"
#include "fcmono/polynomial.hpp"
#include "fcmono/serialize.hpp"

namespace fcmono {

/// Integral model of the a = b = 1/2, c = (1, ..., 1) system in the basis
/// given by the columns of P.
struct IntegerModel {
  int n = 0;
  ExactMatrix P;
  ExactMatrix H_prime;
  std::vector<ExactMatrix> M_prime;  // M'_0, ..., M'_n
};

/// The shipped fixture for n = 2 or n = 3; throws PreconditionError otherwise.
IntegerModel load_fixture(int n);
IntegerModel model_from_json(const Json& j);
Json model_to_json(const IntegerModel& m);

/// The base system a = b = 1/2, c = (1, ..., 1).
ParameterSet special_parameters(int n);

/// H' = tP H P, M'_k = P^{-1} M_k P, integrality, tM'_k H' M'_k = H' and
/// tH' = (-1)^n H'. A mismatch names the first differing entry.
std::vector<IdentityCheck> verify_change_of_basis(const IntegerModel& model);

/// m H tm for the Segre monomials m = (s0 t0, s0 t1, s1 t0, s1 t1), in the
/// variables (s0, s1, t0, t1). H must be a rational 4x4 matrix.
Polynomial segre_quadric(const ExactMatrix& h);
/// True when the quadric of the model's H' vanishes identically.
bool segre_quadric_check(const IntegerModel& model);

/// z -> (a z + b) / (c z + d).
struct Moebius {
  Rational a = 1, b = 0, c = 0, d = 1;

  Moebius compose(const Moebius& inner) const;  // this o inner
  Moebius inverse() const;
  std::string to_string() const;
};
/// Equality up to a nonzero common scalar.
bool projectively_equal(const Moebius& x, const Moebius& y);

/// Action on P^1 x P^1 in the affine coordinates s = s1/s0, t = t1/t0.
/// Without swap the image is (first(s), second(t)); with swap it is
/// (first(t), second(s)).
struct MoebiusPair {
  bool swap = false;
  Moebius first;
  Moebius second;

  std::string to_string() const;
};

/// The action of X on P^1 x P^1 induced through the Segre embedding, with
/// X acting contragrediently: x -> t(X)^{-1} x. nullopt when that matrix is
/// not a (possibly swapped) tensor product of two 2x2 matrices.
std::optional<MoebiusPair> extract_moebius_pair(const ExactMatrix& x);

/// For each stated law M'_k . (s, t), checks that t(M'_k)^{-1} (1, t, s, st)
/// is proportional to the Segre vector of the image point, as an identity of
/// polynomials in s and t.
std::vector<IdentityCheck> moebius_action_check(const IntegerModel& model);

/// The four products M'_1, M'_2, M'_0 M'_1 M'_0, M'_0 M'_2 M'_0 act
/// factorwise by the standard Gamma(2) generators (or their inverses) and
/// the identity, and factor extraction is multiplicative on words of
/// length up to 6 in these generators and their inverses.
std::vector<IdentityCheck> gamma2_generator_check(const IntegerModel& model);

}  // namespace fcmono
