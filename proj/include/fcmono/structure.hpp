#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fcmono/identities.hpp"
#include "fcmono/monodromy.hpp"

namespace fcmono {

enum class Tri { holds, fails, unknown };
std::string to_string(Tri t);

/// alpha or beta coincides with prod_k gamma_k^{i_k}.
struct IrrFailure {
  std::string which;  // "alpha" or "beta"
  IndexWord word;
};

struct IrreducibilityVerdict {
  Tri mon_irreducible = Tri::unknown;
  std::vector<IrrFailure> failures;  // every coincidence, in word order
  Tri ref_irreducible = Tri::unknown;
  /// Members of {gamma_1, ..., gamma_n, alpha/beta} equal to -1, named
  /// "gamma_k" or "alpha/beta".
  std::vector<std::string> minus_one_members;
  std::size_t minus_one_count() const { return minus_one_members.size(); }
};

IrreducibilityVerdict check_irr(const ParameterSet& params);

enum class WitnessKind { two_gammas, gamma_and_ab };
std::string to_string(WitnessKind k);

/// One coefficient lambda with M_0 e = e - lambda e_{1..1} (two gammas) or
/// M_0 e = e + lambda e_{1..1} (gamma and alpha/beta).
struct LambdaEntry {
  std::string label;        // e.g. "lambda_1;01"
  IndexWord basis_word;     // the e_I the relation is about
  CycNum value;             // from the closed formula
  bool matches_M0 = false;  // relation verified against the M_0 column
};

/// Complementary subspaces W+ and W- invariant under every reflection R_I.
/// The special tensor factors sit at slots k1 (and k2), 1-based.
struct ReducibleWitness {
  WitnessKind kind = WitnessKind::two_gammas;
  std::size_t k1 = 0;
  std::size_t k2 = 0;  // 0 for gamma_and_ab
  std::vector<Vector> W_plus;
  std::vector<Vector> W_minus;
  std::vector<LambdaEntry> lambda_table;
};

/// Throws PreconditionError unless two gamma_k equal -1, or one gamma_k and
/// alpha/beta equal -1. Two gammas take precedence.
ReducibleWitness build_reducible_witness(const MonodromySystem& sys);

/// Checks properness, complementarity, the generator actions (which swap or
/// preserve W+/-), invariance under every R_I, and the lambda table.
std::vector<IdentityCheck> verify_witness(const MonodromySystem& sys,
                                          const ReducibleWitness& witness);

struct OrderProbe {
  bool finite = false;
  std::size_t order = 0;  // valid when finite
  std::size_t powers_tried = 0;
};

/// Order of M_k, found by multiplying up to `budget` powers. The set of
/// conjugates M_k^d M_0 M_k^{-d} is finite exactly when this order is.
OrderProbe conjugate_orbit_probe(const MonodromySystem& sys, std::size_t k, std::size_t budget);

struct GroupEnumeration {
  bool complete = false;
  std::size_t element_count = 0;  // group order when complete
};

/// Breadth-first closure of the group generated by `generators` and their
/// inverses, stopping once more than `budget` elements are found.
GroupEnumeration enumerate_group(const std::vector<ExactMatrix>& generators, std::size_t budget);

/// M_0, ..., M_n.
std::vector<ExactMatrix> monodromy_generators(const MonodromySystem& sys);
/// R_I for every I.
std::vector<ExactMatrix> reflection_generators(const MonodromySystem& sys);

}  // namespace fcmono
