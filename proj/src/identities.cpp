#include "fcmono/identities.hpp"

#include <sstream>

#include "fcmono/errors.hpp"
#include "fcmono/structure.hpp"

namespace fcmono {

namespace {

IdentityCheck make(std::string name, bool passed, std::string detail = {}) {
  return IdentityCheck{std::move(name), passed, passed ? std::string() : std::move(detail)};
}

std::string first_difference(const ExactMatrix& a, const ExactMatrix& b) {
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (a(r, c) != b(r, c)) {
        std::ostringstream out;
        out << "first difference at (" << r << "," << c << "): " << a(r, c).to_string()
            << " vs " << b(r, c).to_string();
        return out.str();
      }
  return "shapes differ";
}

IdentityCheck matrix_equal(std::string name, const ExactMatrix& lhs, const ExactMatrix& rhs) {
  const bool ok = lhs == rhs;
  return make(std::move(name), ok, ok ? std::string() : first_difference(lhs, rhs));
}

std::string gen_name(std::size_t i) { return "M" + std::to_string(i); }

}  // namespace

bool all_passed(const std::vector<IdentityCheck>& checks) {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::vector<IdentityCheck> check_isometries(const MonodromySystem& sys) {
  std::vector<IdentityCheck> out;
  if (!sys.H) {
    out.push_back(make("isometry", false, *sys.h_undefined));
    return out;
  }
  const ExactMatrix& H = *sys.H;
  for (std::size_t i = 0; i <= sys.n; ++i) {
    const ExactMatrix& M = sys.M[i];
    out.push_back(matrix_equal("isometry " + gen_name(i) + ": tM H M^v = H",
                               M.transpose() * H * M.involution(), H));
  }
  const ExactMatrix rhs = (sys.n % 2 == 0 ? CycNum(1) : CycNum(-1)) * H.involution();
  out.push_back(matrix_equal("tH = (-1)^n H^v", H.transpose(), rhs));
  return out;
}

std::vector<IdentityCheck> check_relations(const MonodromySystem& sys) {
  std::vector<IdentityCheck> out;
  for (std::size_t i = 1; i <= sys.n; ++i)
    for (std::size_t j = i + 1; j <= sys.n; ++j)
      out.push_back(matrix_equal("commute " + gen_name(i) + " " + gen_name(j),
                                 sys.M[i] * sys.M[j], sys.M[j] * sys.M[i]));
  // For n = 1 the fundamental group is free on two loops; no relation holds.
  for (std::size_t k = 1; k <= sys.n && sys.n >= 2; ++k) {
    const ExactMatrix a = sys.M[0] * sys.M[k];
    const ExactMatrix b = sys.M[k] * sys.M[0];
    out.push_back(matrix_equal("(M0 " + gen_name(k) + ")^2 = (" + gen_name(k) + " M0)^2",
                               a * a, b * b));
  }
  return out;
}

std::vector<IdentityCheck> check_reflection_structure(const MonodromySystem& sys) {
  std::vector<IdentityCheck> out;
  const ExactMatrix E = ExactMatrix::identity(sys.size);
  const std::size_t r = rank(sys.M[0] - E);
  out.push_back(make("rank(M0 - E) = 1", r == 1, "rank is " + std::to_string(r)));

  const CycNum d = det(sys.M[0]);
  out.push_back(make("det(M0) = delta0", d == sys.delta0,
                     d.to_string() + " vs " + sys.delta0.to_string()));

  const Vector top = basis_vector(IndexWord::ones(sys.n));
  out.push_back(make("M0 e_1..1 = delta0 e_1..1",
                     equal(sys.M[0] * top, scale(sys.delta0, top)), "eigenvector relation fails"));

  out.push_back(make("M0 lower triangular", sys.M[0].is_lower_triangular(), "not lower triangular"));
  for (std::size_t k = 1; k <= sys.n; ++k) {
    out.push_back(make(gen_name(k) + " upper triangular", sys.M[k].is_upper_triangular(),
                       "not upper triangular"));
    const CycNum dk = det(sys.M[k]);
    const CycNum expected = sys.roots.gamma[k - 1].inverse().pow(
        static_cast<std::int64_t>(sys.size / 2));
    // det(G_k (x) E_{2^{n-1}}) = det(G_k)^{2^{n-1}}.
    out.push_back(make("det(" + gen_name(k) + ") = (1/gamma_k)^(2^(n-1))", dk == expected,
                       dk.to_string() + " vs " + expected.to_string()));
  }

  if (!sys.H) {
    out.push_back(make("ker N0 = {w : tw H e_1..1 = 0}", false, *sys.h_undefined));
    return out;
  }
  const auto ker = kernel_basis(sys.N0);
  const Vector he = (*sys.H) * top;  // tw H e = w . (H e)
  bool members = true;
  for (const auto& w : ker) members = members && dot(w, he).is_zero();
  const bool hyperplane = !is_zero(he);
  std::ostringstream detail;
  detail << "kernel dimension " << ker.size() << ", members " << (members ? "ok" : "fail")
         << ", H e_1..1 " << (hyperplane ? "nonzero" : "zero");
  out.push_back(make("ker N0 = {w : tw H e_1..1 = 0}",
                     ker.size() == sys.size - 1 && members && hyperplane, detail.str()));
  return out;
}

std::vector<IdentityCheck> check_basis(const MonodromySystem& sys) {
  std::vector<IdentityCheck> out;
  std::vector<Vector> fs;
  bool agree = true;
  for (const auto& word : IndexWord::all(sys.n)) {
    const Vector f = build_fI(sys, word);
    agree = agree && equal(f, build_fI_by_action(sys, word));
    fs.push_back(f);
  }
  out.push_back(make("f_I tensor form = M^I e_1..1", agree, "constructions disagree"));
  out.push_back(make("f_0..0 = e_1..1", equal(fs.front(), basis_vector(IndexWord::ones(sys.n))),
                     "f_0..0 differs from e_1..1"));
  if (check_irr(sys.params).mon_irreducible == Tri::holds) {
    const std::size_t r = rank_of(fs);
    out.push_back(make("f_I form a basis", r == sys.size, "rank " + std::to_string(r)));
    const std::size_t nr = rank(nu_matrix(sys));
    out.push_back(make("nu map invertible", nr == sys.size, "nu matrix has rank " + std::to_string(nr)));
  }
  return out;
}

std::vector<IdentityCheck> check_reflections(const MonodromySystem& sys) {
  std::vector<IdentityCheck> out;
  for (const auto& refl : all_reflections(sys)) {
    const std::string tag = "R_" + refl.word.to_string();
    const bool rank_one = rank(refl.N) == 1;
    out.push_back(make(tag + " rank(E - R) = 1", rank_one, "rank differs from 1"));
    // For rank-one N, det(E - N) = 1 - tr(N).
    CycNum d;
    if (rank_one) {
      CycNum tr(0);
      for (std::size_t i = 0; i < sys.size; ++i) tr += refl.N(i, i);
      d = (CycNum(1) - tr).canonical();
    } else {
      d = det(refl.R);
    }
    out.push_back(make(tag + " det = delta0", d == sys.delta0, d.to_string()));
    bool image = !refl.N.is_zero();
    for (std::size_t c = 0; c < sys.size && image; ++c)
      image = in_span({refl.f}, refl.N.column(c));
    out.push_back(make(tag + " image = C f_I", image, "a column leaves C f_I"));
    if (sys.H) {
      const Vector hf = (*sys.H) * involution(refl.f);
      const auto ker = kernel_basis(refl.N);
      bool members = !is_zero(hf) && ker.size() == sys.size - 1;
      for (const auto& w : ker) members = members && dot(w, hf).is_zero();
      out.push_back(make(tag + " ker = {w : tw H f_I^v = 0}", members,
                         "kernel does not match the orthogonal complement"));
    }
  }
  return out;
}

bool real_form_hypotheses(const ParameterSet& params) {
  if (!is_integer(params.a + params.b)) return false;
  Rational sum(0);
  for (const auto& c : params.c) {
    if (!is_integer(Rational(2) * c)) return false;
    sum += c;
  }
  return is_integer(sum);
}

std::vector<IdentityCheck> check_rationality(const MonodromySystem& sys) {
  std::vector<IdentityCheck> out;
  if (!real_form_hypotheses(sys.params)) return out;
  bool ok = true;
  for (const auto& m : sys.M) ok = ok && m.is_rational();
  out.push_back(make("generators rational", ok, "an entry is irrational"));
  if (sys.H) out.push_back(make("H rational", sys.H->is_rational(), "an entry is irrational"));
  return out;
}

std::vector<IdentityCheck> verify_system(const MonodromySystem& sys) {
  std::vector<IdentityCheck> out;
  for (auto part : {check_isometries(sys), check_relations(sys), check_reflection_structure(sys),
                    check_basis(sys), check_reflections(sys), check_rationality(sys)})
    out.insert(out.end(), part.begin(), part.end());
  return out;
}

}  // namespace fcmono
