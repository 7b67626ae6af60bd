#include "fcmono/structure.hpp"

#include <deque>
#include <sstream>
#include <unordered_set>

#include "fcmono/errors.hpp"

namespace fcmono {

namespace {

int sign_power(std::size_t exponent) { return exponent % 2 == 0 ? 1 : -1; }

bool equals_minus_one(const CycNum& x) { return (x + CycNum(1)).is_zero(); }

// u_0 = e_0 and u_1 = 2 e_1 - e_0, the eigenvectors of [[1,1],[0,-1]].
Vector special_factor(int x) {
  return x == 0 ? Vector{CycNum(1), CycNum(0)} : Vector{CycNum(-1), CycNum(2)};
}

Vector unit_factor(int j) {
  return j == 0 ? Vector{CycNum(1), CycNum(0)} : Vector{CycNum(0), CycNum(1)};
}

Vector tensor(const std::vector<Vector>& factors) {
  Vector out = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) out = paper_kron(out, factors[k]);
  return out;
}

// Slots other than the special ones, in increasing order.
std::vector<std::size_t> rest_slots(std::size_t n, std::size_t p, std::size_t q) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < n; ++k)
    if (k != p && k != q) out.push_back(k);
  return out;
}

// Vector with u_x at slot p, u_y at slot q (if q < n) and e_{tail} elsewhere.
Vector witness_vector(std::size_t n, std::size_t p, int x, std::size_t q, int y,
                      const std::vector<std::size_t>& rest, const IndexWord& tail) {
  std::vector<Vector> factors(n);
  factors[p] = special_factor(x);
  if (q < n) factors[q] = special_factor(y);
  for (std::size_t t = 0; t < rest.size(); ++t) factors[rest[t]] = unit_factor(tail[t]);
  return tensor(factors);
}

// lambda_{i_rest} = (-1)^{n+|J|} (alpha beta + (-1)^{|J|} prod gamma^{j}) prod gamma^{1-j} / (alpha beta)
CycNum lambda_generic(const MonodromySystem& sys, const std::vector<std::size_t>& rest,
                      const IndexWord& tail) {
  const CycNum ab = (sys.roots.alpha * sys.roots.beta).canonical();
  CycNum with(1), without(1);
  for (std::size_t t = 0; t < rest.size(); ++t) {
    if (tail[t])
      with *= sys.roots.gamma[rest[t]];
    else
      without *= sys.roots.gamma[rest[t]];
  }
  const std::size_t w = static_cast<std::size_t>(tail.weight());
  return (CycNum(sign_power(sys.n + w)) * (ab + CycNum(sign_power(w)) * with) * without *
          ab.inverse())
      .canonical();
}

CycNum lambda_zero(const MonodromySystem& sys, const std::vector<std::size_t>& rest) {
  CycNum prod(1);
  for (auto k : rest) prod *= sys.roots.gamma[k];
  const CycNum& a = sys.roots.alpha;
  const CycNum& b = sys.roots.beta;
  return (CycNum(sign_power(sys.n)) * (a - CycNum(1)) * (b - CycNum(1)) * prod *
          (a * b).inverse())
      .canonical();
}

IndexWord word_from_slots(std::size_t n, std::size_t p, int x, std::size_t q, int y,
                          const std::vector<std::size_t>& rest, const IndexWord& tail) {
  std::vector<int> bits(n, 0);
  bits[p] = x;
  if (q < n) bits[q] = y;
  for (std::size_t t = 0; t < rest.size(); ++t) bits[rest[t]] = tail[t];
  return IndexWord(std::move(bits));
}

bool maps_into(const ExactMatrix& m, const std::vector<Vector>& src,
               const std::vector<Vector>& dst) {
  for (const auto& s : src)
    if (!in_span(dst, m * s)) return false;
  return true;
}

IdentityCheck make(std::string name, bool passed, std::string detail = {}) {
  return IdentityCheck{std::move(name), passed, passed ? std::string() : std::move(detail)};
}

}  // namespace

std::string to_string(Tri t) {
  switch (t) {
    case Tri::holds:
      return "holds";
    case Tri::fails:
      return "fails";
    case Tri::unknown:
      break;
  }
  return "unknown";
}

std::string to_string(WitnessKind k) {
  return k == WitnessKind::two_gammas ? "two-gammas" : "gamma-and-ab";
}

IrreducibilityVerdict check_irr(const ParameterSet& params) {
  params.validate();
  const UnitRoots roots = unit_roots(params);
  IrreducibilityVerdict verdict;
  for (const auto& word : IndexWord::all(params.n())) {
    CycNum prod(1);
    for (std::size_t k = 0; k < word.size(); ++k)
      if (word[k]) prod *= roots.gamma[k];
    if (roots.alpha == prod) verdict.failures.push_back({"alpha", word});
    if (roots.beta == prod) verdict.failures.push_back({"beta", word});
  }
  verdict.mon_irreducible = verdict.failures.empty() ? Tri::holds : Tri::fails;
  for (std::size_t k = 0; k < roots.gamma.size(); ++k)
    if (equals_minus_one(roots.gamma[k]))
      verdict.minus_one_members.push_back("gamma_" + std::to_string(k + 1));
  if (equals_minus_one(roots.alpha * roots.beta.inverse()))
    verdict.minus_one_members.push_back("alpha/beta");
  // A reducible Mon has a Ref-invariant subspace as well.
  verdict.ref_irreducible =
      verdict.mon_irreducible == Tri::holds && verdict.minus_one_count() <= 1 ? Tri::holds
                                                                                : Tri::fails;
  return verdict;
}

ReducibleWitness build_reducible_witness(const MonodromySystem& sys) {
  std::vector<std::size_t> minus_slots;
  for (std::size_t k = 0; k < sys.n; ++k)
    if (equals_minus_one(sys.roots.gamma[k])) minus_slots.push_back(k);
  const bool ab_minus = equals_minus_one(sys.roots.alpha * sys.roots.beta.inverse());

  ReducibleWitness w;
  const std::size_t n = sys.n;
  if (minus_slots.size() >= 2) {
    const std::size_t p = minus_slots[0], q = minus_slots[1];
    w.kind = WitnessKind::two_gammas;
    w.k1 = p + 1;
    w.k2 = q + 1;
    const auto rest = rest_slots(n, p, q);
    const auto tails = IndexWord::all(rest.size());
    for (int sign : {1, -1}) {
      auto& space = sign > 0 ? w.W_plus : w.W_minus;
      const CycNum s(sign);
      for (const auto& tail : tails)
        space.push_back(add(witness_vector(n, p, 0, q, 0, rest, tail),
                            scale(s, witness_vector(n, p, 1, q, 1, rest, tail))));
      for (const auto& tail : tails)
        space.push_back(add(witness_vector(n, p, 1, q, 0, rest, tail),
                            scale(s, witness_vector(n, p, 0, q, 1, rest, tail))));
    }
    for (const auto& tail : tails) {
      const bool tail_zero = tail.weight() == 0;
      const CycNum l1 = lambda_generic(sys, rest, tail);
      const CycNum l0 = tail_zero ? lambda_zero(sys, rest) : l1;
      for (int x : {0, 1})
        for (int y : {0, 1}) {
          const bool zero_pair = x == 0 && y == 0;
          LambdaEntry e;
          e.label = std::string(zero_pair ? "lambda_0;" : "lambda_1;") + tail.to_string();
          e.basis_word = word_from_slots(n, p, x, q, y, rest, tail);
          e.value = zero_pair ? l0 : l1;
          w.lambda_table.push_back(std::move(e));
        }
    }
  } else if (minus_slots.size() == 1 && ab_minus) {
    const std::size_t p = minus_slots[0];
    w.kind = WitnessKind::gamma_and_ab;
    w.k1 = p + 1;
    w.k2 = 0;
    const auto rest = rest_slots(n, p, n);
    const auto tails = IndexWord::all(rest.size());
    for (int sign : {1, -1}) {
      auto& space = sign > 0 ? w.W_plus : w.W_minus;
      for (const auto& tail : tails)
        space.push_back(add(witness_vector(n, p, 0, n, 0, rest, tail),
                            scale(CycNum(sign), witness_vector(n, p, 1, n, 0, rest, tail))));
    }
    for (const auto& tail : tails) {
      const CycNum l = lambda_generic(sys, rest, tail);
      for (int x : {0, 1}) {
        LambdaEntry e;
        e.label = "lambda_" + tail.to_string();
        e.basis_word = word_from_slots(n, p, x, n, 0, rest, tail);
        e.value = l;
        w.lambda_table.push_back(std::move(e));
      }
    }
  } else {
    throw PreconditionError(
        "no reducible pattern: need two gamma_k = -1, or one gamma_k = -1 with alpha/beta = -1");
  }

  const Vector top = basis_vector(IndexWord::ones(n));
  const CycNum lambda_sign = w.kind == WitnessKind::two_gammas ? CycNum(-1) : CycNum(1);
  for (auto& e : w.lambda_table) {
    const Vector expected = add(basis_vector(e.basis_word), scale(lambda_sign * e.value, top));
    e.matches_M0 = equal(sys.M[0] * basis_vector(e.basis_word), expected);
  }
  return w;
}

std::vector<IdentityCheck> verify_witness(const MonodromySystem& sys,
                                          const ReducibleWitness& witness) {
  std::vector<IdentityCheck> out;
  const std::size_t half = sys.size / 2;
  const std::size_t rp = rank_of(witness.W_plus);
  const std::size_t rm = rank_of(witness.W_minus);
  out.push_back(make("dim W+ = 2^(n-1)", witness.W_plus.size() == half && rp == half,
                     "rank " + std::to_string(rp)));
  out.push_back(make("dim W- = 2^(n-1)", witness.W_minus.size() == half && rm == half,
                     "rank " + std::to_string(rm)));
  std::vector<Vector> both = witness.W_plus;
  both.insert(both.end(), witness.W_minus.begin(), witness.W_minus.end());
  const std::size_t r = rank_of(both);
  out.push_back(make("W+ and W- complementary", r == sys.size, "joint rank " + std::to_string(r)));
  out.push_back(make("e_1..1 in W+", in_span(witness.W_plus, basis_vector(IndexWord::ones(sys.n))),
                     "e_1..1 not in W+"));

  auto check_pair = [&](const std::string& name, const ExactMatrix& m, bool swaps) {
    const auto& to_plus = swaps ? witness.W_minus : witness.W_plus;
    const auto& to_minus = swaps ? witness.W_plus : witness.W_minus;
    const bool ok = maps_into(m, witness.W_plus, to_plus) && maps_into(m, witness.W_minus, to_minus);
    out.push_back(make(name + (swaps ? " W+- -> W-+" : " W+- -> W+-"), ok, "image leaves target"));
  };
  check_pair("M0", sys.M[0], false);
  for (std::size_t k = 1; k <= sys.n; ++k) {
    const bool swaps = k == witness.k1 || k == witness.k2;
    check_pair("M" + std::to_string(k), sys.M[k], swaps);
  }
  for (const auto& refl : all_reflections(sys))
    check_pair("R_" + refl.word.to_string(), refl.R, false);

  bool lambdas = !witness.lambda_table.empty();
  std::string bad;
  for (const auto& e : witness.lambda_table)
    if (!e.matches_M0) {
      lambdas = false;
      if (bad.empty()) bad = e.label + " at e_" + e.basis_word.to_string();
    }
  out.push_back(make("lambda table matches M0 columns", lambdas, bad));
  return out;
}

OrderProbe conjugate_orbit_probe(const MonodromySystem& sys, std::size_t k, std::size_t budget) {
  if (budget < 1) throw PreconditionError("budget must be at least 1");
  if (k < 1 || k > sys.n) throw PreconditionError("generator index outside 1..n");
  OrderProbe probe;
  ExactMatrix power = sys.M[k];
  for (std::size_t d = 1; d <= budget; ++d) {
    probe.powers_tried = d;
    if (power.is_identity()) {
      probe.finite = true;
      probe.order = d;
      return probe;
    }
    power = power * sys.M[k];
  }
  return probe;
}

GroupEnumeration enumerate_group(const std::vector<ExactMatrix>& generators, std::size_t budget) {
  if (budget < 1) throw PreconditionError("budget must be at least 1");
  if (generators.empty()) return GroupEnumeration{true, 1};
  const std::size_t dim = generators.front().rows();
  std::vector<ExactMatrix> steps;
  std::unordered_set<ExactMatrix, ExactMatrixHash> step_set;
  for (const auto& g : generators) {
    if (!g.is_square() || g.rows() != dim) throw DimensionMismatch("generators differ in shape");
    for (const auto& s : {g.canonical(), inverse(g)})
      if (step_set.insert(s).second) steps.push_back(s);
  }
  std::unordered_set<ExactMatrix, ExactMatrixHash> seen;
  std::deque<ExactMatrix> frontier;
  const ExactMatrix e = ExactMatrix::identity(dim);
  seen.insert(e);
  frontier.push_back(e);
  while (!frontier.empty()) {
    const ExactMatrix g = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& s : steps) {
      ExactMatrix h = g * s;
      if (seen.count(h)) continue;
      if (seen.size() >= budget) return GroupEnumeration{false, seen.size()};
      seen.insert(h);
      frontier.push_back(std::move(h));
    }
  }
  return GroupEnumeration{true, seen.size()};
}

std::vector<ExactMatrix> monodromy_generators(const MonodromySystem& sys) { return sys.M; }

std::vector<ExactMatrix> reflection_generators(const MonodromySystem& sys) {
  std::vector<ExactMatrix> out;
  for (const auto& refl : all_reflections(sys)) out.push_back(refl.R);
  return out;
}

}  // namespace fcmono
