#include "fcmono/special_models.hpp"

#include <array>
#include <functional>
#include <random>
#include <sstream>

#include "fcmono/errors.hpp"
#include "fcmono/fixtures_data.hpp"
#include "fcmono/monodromy.hpp"

namespace fcmono {

namespace {

std::string entry_name(std::size_t r, std::size_t c) {
  return "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
}

// Compares a computed matrix with the fixture. On mismatch names the first
// differing entry and, when it holds, the scalar relating the two.
IdentityCheck compare(std::string name, const ExactMatrix& computed, const ExactMatrix& fixture) {
  IdentityCheck check{std::move(name), computed == fixture, {}};
  if (check.passed) return check;
  if (computed.rows() != fixture.rows() || computed.cols() != fixture.cols()) {
    check.detail = "shapes differ";
    return check;
  }
  std::ostringstream out;
  for (std::size_t r = 0, done = 0; r < fixture.rows() && !done; ++r)
    for (std::size_t c = 0; c < fixture.cols(); ++c)
      if (computed(r, c) != fixture(r, c)) {
        out << "first differing entry " << entry_name(r, c) << ": computed "
            << computed(r, c).to_string() << ", fixture " << fixture(r, c).to_string();
        done = 1;
        break;
      }
  for (std::size_t i = 0; i < fixture.entries().size(); ++i) {
    if (fixture.entries()[i].is_zero()) continue;
    const CycNum lambda = computed.entries()[i] / fixture.entries()[i];
    if (!lambda.is_zero() && computed == lambda * fixture)
      out << "; computed = " << lambda.to_string() << " * fixture";
    break;
  }
  check.detail = out.str();
  return check;
}

IdentityCheck make(std::string name, bool passed, std::string detail = {}) {
  return IdentityCheck{std::move(name), passed, std::move(detail)};
}

std::string prime(std::size_t k) { return "M'_" + std::to_string(k); }

void require_n2(const IntegerModel& model) {
  if (model.n != 2) throw PreconditionError("this check needs the n = 2 model");
  if (model.H_prime.rows() != 4 || model.H_prime.cols() != 4 || model.M_prime.size() != 3)
    throw DimensionMismatch("the n = 2 model has 4x4 matrices M'_0, M'_1, M'_2");
  for (const auto& m : model.M_prime)
    if (m.rows() != 4 || m.cols() != 4) throw DimensionMismatch("M' matrices must be 4x4");
}

Polynomial poly_of(std::size_t vars, const CycNum& x) {
  return Polynomial::constant(vars, x.to_rational());
}

// Contragredient t(X)^{-1}.
ExactMatrix contragredient(const ExactMatrix& x) { return inverse(x).transpose(); }

// Moebius map of a 2x2 matrix g acting on (z0, z1), in the coordinate z1/z0.
Moebius moebius_of(const std::array<std::array<CycNum, 2>, 2>& g) {
  return Moebius{g[1][1].to_rational(), g[1][0].to_rational(), g[0][1].to_rational(),
                 g[0][0].to_rational()};
}

// Splits b = (g (x) h) with g acting on the s0/s1 index (slow) and h on the
// t0/t1 index (fast), when b has that shape.
std::optional<std::pair<Moebius, Moebius>> split_tensor(const ExactMatrix& b) {
  ExactMatrix r(4, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = b(2 * i + j, 2 * k + l);
  if (rank(r) != 1) return std::nullopt;
  std::size_t p = 0, q = 0;
  for (std::size_t i = 0; i < 16; ++i)
    if (!r.entries()[i].is_zero()) {
      p = i / 4;
      q = i % 4;
      break;
    }
  std::array<std::array<CycNum, 2>, 2> g, h;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t k = 0; k < 2; ++k) {
      g[i][k] = r(2 * i + k, q);
      h[i][k] = r(p, 2 * i + k);
    }
  return std::make_pair(moebius_of(g), moebius_of(h));
}

MoebiusPair compose(const MoebiusPair& outer, const MoebiusPair& inner) {
  if (!outer.swap)
    return {inner.swap, outer.first.compose(inner.first), outer.second.compose(inner.second)};
  return {!inner.swap, outer.first.compose(inner.second), outer.second.compose(inner.first)};
}

bool pair_equal(const MoebiusPair& x, const MoebiusPair& y) {
  return x.swap == y.swap && projectively_equal(x.first, y.first) &&
         projectively_equal(x.second, y.second);
}

const Moebius kIdentity{1, 0, 0, 1};
const Moebius kUpper{1, 2, 0, 1};
const Moebius kLower{1, 0, 2, 1};

enum class Factor { identity, upper, lower, other };

Factor factor_kind(const Moebius& m) {
  if (projectively_equal(m, kIdentity)) return Factor::identity;
  if (projectively_equal(m, kUpper) || projectively_equal(m, kUpper.inverse()))
    return Factor::upper;
  if (projectively_equal(m, kLower) || projectively_equal(m, kLower.inverse()))
    return Factor::lower;
  return Factor::other;
}

std::string factor_name(Factor f) {
  switch (f) {
    case Factor::identity: return "identity";
    case Factor::upper: return "[[1,2],[0,1]]^+-1";
    case Factor::lower: return "[[1,0],[2,1]]^+-1";
    case Factor::other: return "not a standard generator";
  }
  return "";
}

// Gamma(2) up to a scalar: the primitive integral multiple has determinant
// 1 and is the identity modulo 2.
bool in_gamma2(const Moebius& m) {
  const std::array<Rational, 4> e{m.a, m.b, m.c, m.d};
  Integer l = 1, g = 0;
  for (const auto& x : e) l = lcm(l, Integer(x.get_den()));
  std::array<Integer, 4> v;
  for (std::size_t i = 0; i < 4; ++i) {
    v[i] = Integer(e[i] * l);
    g = gcd(g, v[i]);
  }
  if (g == 0) return false;
  for (auto& x : v) x /= g;
  const Integer det = v[0] * v[3] - v[1] * v[2];
  auto even = [](const Integer& x) { return mpz_even_p(x.get_mpz_t()) != 0; };
  return det == 1 && !even(v[0]) && !even(v[3]) && even(v[1]) && even(v[2]);
}

}  // namespace

Moebius Moebius::compose(const Moebius& inner) const {
  return {a * inner.a + b * inner.c, a * inner.b + b * inner.d, c * inner.a + d * inner.c,
          c * inner.b + d * inner.d};
}

Moebius Moebius::inverse() const { return {d, -b, -c, a}; }

std::string Moebius::to_string() const {
  return "[[" + a.get_str() + "," + b.get_str() + "],[" + c.get_str() + "," + d.get_str() + "]]";
}

bool projectively_equal(const Moebius& x, const Moebius& y) {
  const std::array<Rational, 4> u{x.a, x.b, x.c, x.d};
  const std::array<Rational, 4> v{y.a, y.b, y.c, y.d};
  bool nonzero_u = false, nonzero_v = false;
  for (std::size_t i = 0; i < 4; ++i) {
    nonzero_u = nonzero_u || u[i] != 0;
    nonzero_v = nonzero_v || v[i] != 0;
    for (std::size_t j = i + 1; j < 4; ++j)
      if (u[i] * v[j] != u[j] * v[i]) return false;
  }
  return nonzero_u && nonzero_v;
}

std::string MoebiusPair::to_string() const {
  return std::string(swap ? "(s, t) -> (" + first.to_string() + " t, " + second.to_string() + " s)"
                          : "(s, t) -> (" + first.to_string() + " s, " + second.to_string() +
                                " t)");
}

IntegerModel model_from_json(const Json& j) {
  IntegerModel m;
  if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_integer())
    throw ParseError("model needs an integer field 'n'");
  m.n = j.at("n").get<int>();
  if (!j.contains("P") || !j.contains("H_prime") || !j.contains("M_prime"))
    throw ParseError("model needs fields P, H_prime and M_prime");
  m.P = matrix_from_json(j.at("P"));
  m.H_prime = matrix_from_json(j.at("H_prime"));
  if (!j.at("M_prime").is_array()) throw ParseError("M_prime must be an array");
  for (const auto& e : j.at("M_prime")) m.M_prime.push_back(matrix_from_json(e));
  return m;
}

Json model_to_json(const IntegerModel& m) {
  Json M = Json::array();
  for (const auto& x : m.M_prime) M.push_back(matrix_to_json(x));
  return Json{{"n", m.n},
              {"P", matrix_to_json(m.P)},
              {"H_prime", matrix_to_json(m.H_prime)},
              {"M_prime", M}};
}

IntegerModel load_fixture(int n) {
  switch (n) {
    case 2: return model_from_json(Json::parse(fixtures::kModelN2));
    case 3: return model_from_json(Json::parse(fixtures::kModelN3));
    default:
      throw PreconditionError("no integral model for n = " + std::to_string(n) +
                              "; fixtures exist for n = 2 and n = 3");
  }
}

ParameterSet special_parameters(int n) {
  if (n < 1) throw PreconditionError("n must be positive");
  return ParameterSet{Rational(1, 2), Rational(1, 2),
                      std::vector<Rational>(static_cast<std::size_t>(n), Rational(1))};
}

std::vector<IdentityCheck> verify_change_of_basis(const IntegerModel& model) {
  if (model.n != 2 && model.n != 3)
    throw PreconditionError("integral models exist for n = 2 and n = 3 only");
  const std::size_t size = std::size_t{1} << model.n;
  auto square = [size](const ExactMatrix& m) { return m.rows() == size && m.cols() == size; };
  if (!square(model.P) || !square(model.H_prime) ||
      model.M_prime.size() != static_cast<std::size_t>(model.n) + 1)
    throw DimensionMismatch("model matrices must be 2^n x 2^n with n + 1 generators");
  for (const auto& m : model.M_prime)
    if (!square(m)) throw DimensionMismatch("model matrices must be 2^n x 2^n");

  const MonodromySystem sys = build_system(special_parameters(model.n));
  const ExactMatrix& H = sys.require_H();
  const ExactMatrix p_inv = inverse(model.P);

  std::vector<IdentityCheck> out;
  out.push_back(compare("H' = tP H P", model.P.transpose() * H * model.P, model.H_prime));
  for (std::size_t k = 0; k < model.M_prime.size(); ++k)
    out.push_back(compare(prime(k) + " = P^-1 M_" + std::to_string(k) + " P",
                          p_inv * sys.M[k] * model.P, model.M_prime[k]));
  for (std::size_t k = 0; k < model.M_prime.size(); ++k)
    out.push_back(make(prime(k) + " integral", model.M_prime[k].is_integral()));
  out.push_back(make("H' integral", model.H_prime.is_integral()));
  for (std::size_t k = 0; k < model.M_prime.size(); ++k) {
    const ExactMatrix& m = model.M_prime[k];
    out.push_back(compare("t" + prime(k) + " H' " + prime(k) + " = H'",
                          m.transpose() * model.H_prime * m, model.H_prime));
  }
  const bool even = model.n % 2 == 0;
  out.push_back(compare(even ? "tH' = H'" : "tH' = -H'", model.H_prime.transpose(),
                        even ? model.H_prime : -model.H_prime));
  return out;
}

Polynomial segre_quadric(const ExactMatrix& h) {
  if (h.rows() != 4 || h.cols() != 4) throw DimensionMismatch("the Segre quadric needs 4x4 H");
  constexpr std::size_t kVars = 4;  // s0, s1, t0, t1
  std::array<Polynomial, 4> m;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      m[2 * i + j] = Polynomial::variable(kVars, i) * Polynomial::variable(kVars, 2 + j);
  Polynomial q(kVars);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (!h(i, j).is_zero()) q += poly_of(kVars, h(i, j)) * m[i] * m[j];
  return q;
}

bool segre_quadric_check(const IntegerModel& model) {
  require_n2(model);
  return segre_quadric(model.H_prime).is_zero();
}

std::optional<MoebiusPair> extract_moebius_pair(const ExactMatrix& x) {
  if (x.rows() != 4 || x.cols() != 4) throw DimensionMismatch("the Segre action needs 4x4");
  if (!x.is_rational()) throw PreconditionError("the Segre action needs rational entries");
  const ExactMatrix a = contragredient(x);
  if (auto direct = split_tensor(a)) return MoebiusPair{false, direct->first, direct->second};
  // Swap of the two P^1 factors: e_{2i+j} <-> e_{2j+i}.
  ExactMatrix swapped(4, 4);
  constexpr std::array<std::size_t, 4> kSwap{0, 2, 1, 3};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) swapped(r, c) = a(r, kSwap[c]);
  if (auto crossed = split_tensor(swapped))
    return MoebiusPair{true, crossed->first, crossed->second};
  return std::nullopt;
}

std::vector<IdentityCheck> moebius_action_check(const IntegerModel& model) {
  require_n2(model);
  struct Law {
    std::size_t k;
    std::string statement;
    MoebiusPair image;
  };
  const Moebius minus_inverse{0, -1, 1, 0};
  const std::vector<Law> laws{
      {0, "M'_0 . (s, t) = (-1/t, -1/s)", {true, minus_inverse, minus_inverse}},
      {1, "M'_1 . (s, t) = (s, t + 2)", {false, kIdentity, kUpper}},
      {2, "M'_2 . (s, t) = (s + 2, t)", {false, kUpper, kIdentity}},
  };
  constexpr std::size_t kVars = 2;  // s, t
  const Polynomial one = Polynomial::constant(kVars, Rational(1));
  const Polynomial s = Polynomial::variable(kVars, 0);
  const Polynomial t = Polynomial::variable(kVars, 1);
  const std::array<Polynomial, 4> segre{one, t, s, s * t};

  std::vector<IdentityCheck> out;
  for (const auto& law : laws) {
    const ExactMatrix a = contragredient(model.M_prime[law.k]);
    std::array<Polynomial, 4> w{Polynomial(kVars), Polynomial(kVars), Polynomial(kVars),
                                Polynomial(kVars)};
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c)
        if (!a(r, c).is_zero()) w[r] += poly_of(kVars, a(r, c)) * segre[c];
    // Image point as [den_s : num_s] x [den_t : num_t].
    const Polynomial& u = law.image.swap ? t : s;
    const Polynomial& v = law.image.swap ? s : t;
    auto num = [&](const Moebius& m, const Polynomial& z) {
      return Polynomial::constant(kVars, m.a) * z + Polynomial::constant(kVars, m.b);
    };
    auto den = [&](const Moebius& m, const Polynomial& z) {
      return Polynomial::constant(kVars, m.c) * z + Polynomial::constant(kVars, m.d);
    };
    const Polynomial ns = num(law.image.first, u), ds = den(law.image.first, u);
    const Polynomial nt = num(law.image.second, v), dt = den(law.image.second, v);
    const std::array<Polynomial, 4> target{ds * dt, ds * nt, ns * dt, ns * nt};
    bool ok = false;
    for (const auto& x : w) ok = ok || !x.is_zero();
    for (std::size_t i = 0; i < 4 && ok; ++i)
      for (std::size_t j = i + 1; j < 4 && ok; ++j)
        ok = (w[i] * target[j] - w[j] * target[i]).is_zero();
    std::string detail;
    if (!ok) {
      const std::vector<std::string> names{"s", "t"};
      detail = "t(M')^-1 (1, t, s, st) = (";
      for (std::size_t i = 0; i < 4; ++i) detail += (i ? ", " : "") + w[i].to_string(names);
      detail += ") is not proportional to (";
      for (std::size_t i = 0; i < 4; ++i) detail += (i ? ", " : "") + target[i].to_string(names);
      detail += ")";
    }
    out.push_back(make(law.statement, ok, detail));
  }
  return out;
}

std::vector<IdentityCheck> gamma2_generator_check(const IntegerModel& model) {
  require_n2(model);
  const auto& M = model.M_prime;
  struct Generator {
    std::string name;
    ExactMatrix matrix;
    Factor s_kind;
    Factor t_kind;
  };
  const std::vector<Generator> gens{
      {"M'_1", M[1], Factor::identity, Factor::upper},
      {"M'_2", M[2], Factor::upper, Factor::identity},
      {"M'_0 M'_1 M'_0", M[0] * M[1] * M[0], Factor::lower, Factor::identity},
      {"M'_0 M'_2 M'_0", M[0] * M[2] * M[0], Factor::identity, Factor::lower},
  };

  std::vector<IdentityCheck> out;
  std::vector<MoebiusPair> pairs;
  bool all_extracted = true;
  for (const auto& g : gens) {
    const auto pair = extract_moebius_pair(g.matrix);
    if (!pair) {
      all_extracted = false;
      out.push_back(make(g.name + " acts factorwise by Gamma(2) generators", false,
                         "not a tensor product of two 2x2 actions"));
      continue;
    }
    pairs.push_back(*pair);
    const Factor fs = factor_kind(pair->first);
    const Factor ft = factor_kind(pair->second);
    const bool ok = !pair->swap && fs == g.s_kind && ft == g.t_kind;
    std::string detail = pair->to_string() + "; s factor " + factor_name(fs) + ", t factor " +
                         factor_name(ft);
    if (!ok)
      detail += "; expected " + factor_name(g.s_kind) + " x " + factor_name(g.t_kind);
    out.push_back(make(g.name + " acts factorwise by Gamma(2) generators", ok, detail));
  }
  if (!all_extracted) return out;

  // Multiplicativity of the extraction on words in the generators and
  // their inverses: all words of length <= 2 plus seeded random words of
  // length 3..6.
  std::vector<ExactMatrix> letters;
  std::vector<MoebiusPair> letter_pairs;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    letters.push_back(gens[i].matrix);
    letter_pairs.push_back(pairs[i]);
    letters.push_back(inverse(gens[i].matrix));
    letter_pairs.push_back(
        MoebiusPair{pairs[i].swap, pairs[i].first.inverse(), pairs[i].second.inverse()});
  }
  std::vector<std::vector<std::size_t>> words;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    words.push_back({i});
    for (std::size_t j = 0; j < letters.size(); ++j) words.push_back({i, j});
  }
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  std::uniform_int_distribution<std::size_t> length(3, 6);
  for (int w = 0; w < 200; ++w) {
    std::vector<std::size_t> word(length(rng));
    for (auto& x : word) x = pick(rng);
    words.push_back(std::move(word));
  }
  std::size_t failures = 0;
  std::string first_failure;
  for (const auto& word : words) {
    ExactMatrix x = ExactMatrix::identity(4);
    MoebiusPair expected{false, kIdentity, kIdentity};
    for (std::size_t letter : word) {
      x = x * letters[letter];
      expected = compose(expected, letter_pairs[letter]);
    }
    const auto got = extract_moebius_pair(x);
    const bool ok = got && pair_equal(*got, expected) && !got->swap && in_gamma2(got->first) &&
                    in_gamma2(got->second);
    if (!ok && failures++ == 0) {
      first_failure = "word";
      for (std::size_t letter : word)
        first_failure += " " + gens[letter / 2].name + (letter % 2 ? "^-1" : "");
    }
  }
  out.push_back(make("factor extraction is a homomorphism into Gamma(2) x Gamma(2) on words",
                     failures == 0,
                     failures == 0 ? std::to_string(words.size()) + " words of length <= 6"
                                   : std::to_string(failures) + " of " +
                                         std::to_string(words.size()) +
                                         " words fail, first: " + first_failure));
  return out;
}

}  // namespace fcmono
