#include "fcmono/monodromy.hpp"

#include <sstream>

#include "fcmono/errors.hpp"

namespace fcmono {

namespace {

int sign_power(std::size_t exponent) { return exponent % 2 == 0 ? 1 : -1; }

CycNum gamma_product(const UnitRoots& roots, const IndexWord& word) {
  CycNum p(1);
  for (std::size_t k = 0; k < word.size(); ++k)
    if (word[k]) p *= roots.gamma[k];
  return p;
}

CycNum gamma_product_complement(const UnitRoots& roots, const IndexWord& word) {
  CycNum p(1);
  for (std::size_t k = 0; k < word.size(); ++k)
    if (!word[k]) p *= roots.gamma[k];
  return p;
}

CycNum full_gamma_product(const UnitRoots& roots) {
  CycNum p(1);
  for (const auto& g : roots.gamma) p *= g;
  return p;
}

ExactMatrix kron_all(const std::vector<ExactMatrix>& factors) {
  ExactMatrix out = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) out = paper_kron(out, factors[k]);
  return out;
}

}  // namespace

ExactMatrix build_Gk(const CycNum& gamma) {
  if (gamma.is_zero()) throw PreconditionError("gamma_k must be nonzero");
  const CycNum inv = gamma.inverse();
  ExactMatrix g(2, 2);
  g(0, 0) = CycNum(1);
  g(0, 1) = -inv;
  g(1, 1) = inv;
  return g;
}

ExactMatrix build_Gk_inverse(const CycNum& gamma) {
  if (gamma.is_zero()) throw PreconditionError("gamma_k must be nonzero");
  ExactMatrix g(2, 2);
  g(0, 0) = CycNum(1);
  g(0, 1) = CycNum(1);
  g(1, 1) = gamma;
  return g;
}

ExactMatrix build_Mk(std::size_t n, std::size_t k, const CycNum& gamma) {
  if (k < 1 || k > n) {
    std::ostringstream msg;
    msg << "generator index k=" << k << " outside 1.." << n;
    throw PreconditionError(msg.str());
  }
  std::vector<ExactMatrix> factors(n, ExactMatrix::identity(2));
  factors[k - 1] = build_Gk(gamma);
  return kron_all(factors);
}

Vector build_v(const UnitRoots& roots) {
  const std::size_t n = roots.gamma.size();
  const CycNum ab = roots.alpha * roots.beta;
  if (ab.is_zero()) throw PreconditionError("alpha and beta must be nonzero");
  const CycNum ab_inv = ab.inverse();
  Vector v(std::size_t{1} << n);
  for (const auto& word : IndexWord::all(n)) {
    const std::size_t w = static_cast<std::size_t>(word.weight());
    CycNum entry;
    if (w == 0) {
      entry = CycNum(sign_power(n)) * (roots.alpha - CycNum(1)) * (roots.beta - CycNum(1)) *
              full_gamma_product(roots) * ab_inv;
    } else {
      entry = CycNum(sign_power(n + w)) *
              (ab + CycNum(sign_power(w)) * gamma_product(roots, word)) *
              gamma_product_complement(roots, word) * ab_inv;
    }
    v[word.rank()] = entry;
  }
  return v;
}

Vector build_v(const ParameterSet& params) { return build_v(unit_roots(params)); }

ExactMatrix build_M0(const UnitRoots& roots) {
  const Vector v = build_v(roots);
  const std::size_t size = v.size();
  ExactMatrix m = ExactMatrix::identity(size);
  for (std::size_t c = 0; c < size; ++c) m(size - 1, c) = m(size - 1, c) - v[c];
  return m;
}

ExactMatrix build_M0(const ParameterSet& params) { return build_M0(unit_roots(params)); }

std::optional<std::string> h_undefined_reason(const UnitRoots& roots) {
  if ((roots.alpha - full_gamma_product(roots)).is_zero())
    return std::string(
        "alpha equals gamma_1*...*gamma_n, so the denominator alpha - gamma_1*...*gamma_n "
        "vanishes");
  if ((roots.beta - CycNum(1)).is_zero())
    return std::string("beta = 1, so the denominator beta - 1 vanishes");
  return std::nullopt;
}

ExactMatrix build_H(const UnitRoots& roots) {
  if (auto reason = h_undefined_reason(roots)) {
    throw UndefinedObject("intersection matrix undefined: " + *reason);
  }
  const std::size_t n = roots.gamma.size();
  // Two-term denominators are inverted separately; their product would not be.
  const CycNum ab = roots.alpha * roots.beta;
  const CycNum denom_a_inv = (roots.alpha - full_gamma_product(roots)).inverse();
  const CycNum first_scale = (roots.alpha - CycNum(1)) * denom_a_inv;
  const CycNum second_scale = denom_a_inv * (roots.beta - CycNum(1)).inverse();
  std::vector<CycNum> minus_gamma(n), one_minus_gamma(n);
  for (std::size_t k = 0; k < n; ++k) {
    minus_gamma[k] = -roots.gamma[k];
    one_minus_gamma[k] = CycNum(1) - roots.gamma[k];
  }
  const auto words = IndexWord::all(n);
  ExactMatrix h(words.size(), words.size());
  for (const auto& I : words) {
    for (const auto& J : words) {
      const IndexWord meet = I * J;
      CycNum entry(1);
      if (meet.weight() == 0) {
        for (std::size_t k = 0; k < n; ++k) {
          if (J[k]) entry *= minus_gamma[k];
          if (I[k] + J[k] == 0) entry *= one_minus_gamma[k];
        }
        entry *= first_scale;
      } else {
        for (std::size_t k = 0; k < n; ++k) {
          if (J[k] && !I[k]) entry *= minus_gamma[k];
          if (!I[k] && !J[k]) entry *= one_minus_gamma[k];
        }
        entry *= (ab + CycNum(sign_power(static_cast<std::size_t>(meet.weight()))) *
                           gamma_product(roots, meet)) *
                  second_scale;
      }
      h(I.rank(), J.rank()) = entry.compact();
    }
  }
  return h;
}

ExactMatrix build_H(const ParameterSet& params) { return build_H(unit_roots(params)); }

CycNum delta0_formula(const UnitRoots& roots) {
  const std::size_t n = roots.gamma.size();
  return CycNum(sign_power(n + 1)) * full_gamma_product(roots) *
         (roots.alpha * roots.beta).inverse();
}

const ExactMatrix& MonodromySystem::require_H() const {
  if (!H) {
    throw UndefinedObject("intersection matrix undefined: " +
                          h_undefined.value_or("unknown reason"));
  }
  return *H;
}

MonodromySystem build_system(const ParameterSet& params) {
  params.validate();
  if (params.n() > kMaxTensorFactors) {
    std::ostringstream msg;
    msg << "n=" << params.n() << " exceeds the supported maximum " << kMaxTensorFactors;
    throw PreconditionError(msg.str());
  }
  MonodromySystem sys;
  sys.params = params;
  sys.roots = unit_roots(params);
  sys.n = params.n();
  sys.size = std::size_t{1} << sys.n;
  sys.v = build_v(sys.roots);
  sys.N0 = ExactMatrix(sys.size, sys.size);
  for (std::size_t c = 0; c < sys.size; ++c) sys.N0(sys.size - 1, c) = sys.v[c];
  sys.M.push_back(ExactMatrix::identity(sys.size) - sys.N0);
  for (std::size_t k = 1; k <= sys.n; ++k)
    sys.M.push_back(build_Mk(sys.n, k, sys.roots.gamma[k - 1]));
  sys.delta0 = delta0_formula(sys.roots);
  const CycNum d = det(sys.M[0]);
  if (d != sys.delta0) {
    throw PreconditionError("det(M_0) = " + d.to_string() +
                            " disagrees with the closed form " + sys.delta0.to_string());
  }
  sys.h_undefined = h_undefined_reason(sys.roots);
  if (!sys.h_undefined) sys.H = build_H(sys.roots);
  return sys;
}

ExactMatrix word_power(const MonodromySystem& sys, const IndexWord& word) {
  if (word.size() != sys.n) throw DimensionMismatch("index word length differs from n");
  std::vector<ExactMatrix> factors;
  for (std::size_t k = 0; k < sys.n; ++k)
    factors.push_back(word[k] ? build_Gk(sys.roots.gamma[k]) : ExactMatrix::identity(2));
  return kron_all(factors);
}

ExactMatrix word_power_inverse(const MonodromySystem& sys, const IndexWord& word) {
  if (word.size() != sys.n) throw DimensionMismatch("index word length differs from n");
  std::vector<ExactMatrix> factors;
  for (std::size_t k = 0; k < sys.n; ++k)
    factors.push_back(word[k] ? build_Gk_inverse(sys.roots.gamma[k])
                              : ExactMatrix::identity(2));
  return kron_all(factors);
}

Vector build_fI(const MonodromySystem& sys, const IndexWord& word) {
  if (word.size() != sys.n) throw DimensionMismatch("index word length differs from n");
  const Vector e1{CycNum(0), CycNum(1)};
  Vector out;
  for (std::size_t k = 0; k < sys.n; ++k) {
    const Vector factor = word[k] ? build_Gk(sys.roots.gamma[k]) * e1 : e1;
    out = k == 0 ? factor : paper_kron(out, factor);
  }
  return out;
}

Vector build_fI_by_action(const MonodromySystem& sys, const IndexWord& word) {
  ExactMatrix m = ExactMatrix::identity(sys.size);
  for (std::size_t k = 0; k < sys.n; ++k)
    if (word[k]) m = m * sys.M[k + 1];
  return m * basis_vector(IndexWord::ones(sys.n));
}

ReflectionGen build_reflection(const MonodromySystem& sys, const IndexWord& word) {
  ReflectionGen r;
  r.word = word;
  r.R = word_power(sys, word) * sys.M[0] * word_power_inverse(sys, word);
  r.N = ExactMatrix::identity(sys.size) - r.R;
  r.f = build_fI(sys, word);
  return r;
}

std::vector<ReflectionGen> all_reflections(const MonodromySystem& sys) {
  std::vector<ReflectionGen> out;
  for (const auto& word : IndexWord::all(sys.n)) out.push_back(build_reflection(sys, word));
  return out;
}

Vector nu_row(const MonodromySystem& sys, const IndexWord& word) {
  return word_power_inverse(sys, word).transpose() * sys.v;
}

ExactMatrix nu_matrix(const MonodromySystem& sys) {
  ExactMatrix out(sys.size, sys.size);
  for (const auto& word : IndexWord::all(sys.n)) {
    const Vector row = nu_row(sys, word);
    for (std::size_t c = 0; c < sys.size; ++c) out(word.rank(), c) = row[c];
  }
  return out;
}

}  // namespace fcmono
