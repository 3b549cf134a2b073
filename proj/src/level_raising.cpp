#include "gsp4/level_raising.hpp"

namespace gsp4 {

namespace {

Poly P() { return Poly::var(symbols::p); }

BigInt big(std::int64_t x) { return BigInt(x); }

BigInt residue(const BigInt& x, std::int64_t ell) { return mod_floor(x, BigInt(ell)); }

void check_ell(std::int64_t ell) {
  if (ell < 3 || !is_prime(ell)) throw std::invalid_argument("l must be an odd prime, got " + std::to_string(ell));
}

std::map<std::string, BigInt> values_of(const EigenData& e) {
  return {{symbols::p, big(e.p)}, {"a0", BigInt(EigenData::a0)}, {"a1", e.a1}, {"a2", e.a2}};
}

Poly substitute_all(Poly x, const std::map<std::string, BigInt>& values) {
  for (const auto& [name, v] : values) x = x.substitute(name, Poly(v));
  return x;
}

IdentityCheck compare(std::string name, Poly lhs, Poly rhs) {
  IdentityCheck c;
  c.name = std::move(name);
  c.holds = lhs == rhs;
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  return c;
}

// Ordinary polynomial in s1, s2, p standing for a1 and a2.
Poly a1_in_pair_sums() {
  Poly s1 = Poly::var("s1"), s2 = Poly::var("s2");
  return (s1 * s2 - P() + P().pow(3)) * Poly::var(symbols::p, -1);
}

}  // namespace

const char* const kAssumptionCaveat =
    "only the Hecke-parameter conditions are checked; the vanishing hypothesis on cohomology "
    "and the residual image and rigidity hypotheses cannot be decided from eigenvalues";

void EigenData::validate() const {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
}

Poly hecke_polynomial_symbolic() {
  Poly x = Poly::var("X"), p = P(), a0 = Poly::var("a0"), a1 = Poly::var("a1"), a2 = Poly::var("a2");
  return x.pow(4) - a2 * x.pow(3) + (p * a1 + (p.pow(3) + p) * a0) * x.pow(2) - p.pow(3) * a0 * a2 * x +
         p.pow(6) * a0.pow(2);
}

Poly hecke_polynomial(const EigenData& e) {
  e.validate();
  return substitute_all(hecke_polynomial_symbolic(), values_of(e));
}

Poly PairQuadratic::as_poly(const std::string& variable) const {
  Poly y = Poly::var(variable);
  return y.pow(2) + Poly(linear) * y + Poly(constant);
}

PairQuadratic pair_quadratic(const EigenData& e) {
  e.validate();
  BigInt p = e.p;
  return {-e.a2, p * e.a1 + p - p * p * p};
}

Poly pair_quadratic_symbolic(const std::string& variable) {
  Poly y = Poly::var(variable);
  return y.pow(2) - Poly::var("a2") * y + P() * Poly::var("a1") + P() - P().pow(3);
}

NonTemperedError::NonTemperedError(int u)
    : std::domain_error("depth unbounded: pair-sum equals " + std::string(u > 0 ? "+" : "-") +
                        "(p+p^2) exactly; input is non-tempered at p"),
      u_(u) {}

WeilLint weil_lint(const EigenData& e) {
  auto r = pair_quadratic(e);
  BigInt p3 = BigInt(e.p) * e.p * e.p;
  BigInt disc = e.a2 * e.a2 - 4 * r.constant;
  BigInt shifted = 4 * p3 + r.constant;  // R(B) + R(-B) over 2, with B^2 = 4p^3
  WeilLint lint;
  if (disc < 0) {
    lint.note = "pair sums are not real";
    return lint;
  }
  bool vertex = e.a2 * e.a2 <= 16 * p3;
  bool ends = shifted >= 0 && shifted * shifted >= 4 * p3 * e.a2 * e.a2;
  lint.within_bound = vertex && ends;
  lint.note = lint.within_bound ? "both pair sums satisfy |s| <= 2p^(3/2)"
                                : "a pair sum exceeds 2p^(3/2) in absolute value";
  return lint;
}

LevelRaisingReport check_level_raising(const EigenData& e, std::int64_t ell, std::optional<int> u_hint) {
  e.validate();
  check_ell(ell);
  if (u_hint && *u_hint != 1 && *u_hint != -1) throw std::invalid_argument("u must be +1 or -1");
  const auto r = pair_quadratic(e);
  const BigInt p = e.p;
  const BigInt c = p + p * p;
  const BigInt l = ell;

  LevelRaisingReport report;
  report.input = e;
  report.ell = ell;
  const bool coprime = residue(p * p - 1, ell) != 0;
  const BigInt a2 = residue(e.a2, ell);

  std::vector<int> signs = u_hint ? std::vector<int>{*u_hint} : std::vector<int>{1, -1};
  for (int u : signs) {
    BranchReport b;
    b.u = u;
    BigInt uc = u * c;
    b.pair_value = r(uc);
    if (b.pair_value == 0) throw NonTemperedError(u);
    b.flags.ell_differs_from_p = ell != e.p;
    b.flags.ell_coprime = coprime;
    b.flags.congruence = residue(b.pair_value, ell) == 0;
    BigInt other = residue(e.a2 - uc, ell);
    b.flags.alpha_noncongruence = other != residue(c, ell) && other != residue(-c, ell);
    b.flags.trace_noncongruence = a2 != residue(2 * c, ell) && a2 != residue(-2 * c, ell);
    b.special = b.flags.ell_differs_from_p && b.flags.ell_coprime && b.flags.congruence && b.flags.alpha_noncongruence &&
                b.flags.trace_noncongruence;
    if (b.special) b.depth = valuation(b.pair_value, l);
    report.branches.push_back(std::move(b));
  }

  const BranchReport* chosen = nullptr;
  for (const auto& b : report.branches)
    if (!chosen && b.special) chosen = &b;
  for (const auto& b : report.branches)
    if (!chosen && b.flags.congruence) chosen = &b;
  if (!chosen) chosen = &report.branches.front();
  report.condition_flags = chosen->flags;
  if (chosen->special) {
    report.special = true;
    report.u = chosen->u;
    report.depth = chosen->depth;
  }
  report.generic_nonlr = residue(r(c), ell) != 0 && residue(r(-c), ell) != 0;
  report.weil = weil_lint(e);
  return report;
}

GenericReport check_generic(const EigenData& e, std::int64_t ell) {
  e.validate();
  check_ell(ell);
  const auto r = pair_quadratic(e);
  const BigInt c = BigInt(e.p) + BigInt(e.p) * e.p;
  GenericReport g;
  g.generic_nonlr = residue(r(c), ell) != 0 && residue(r(-c), ell) != 0;
  try {
    auto lr = check_level_raising(e, ell);
    g.generic_lr = lr.special;
    g.u = lr.u;
  } catch (const NonTemperedError&) {
    g.non_tempered = true;
  }
  return g;
}

Poly HeckeMatrix::determinant() const {
  return entries[0][0] * entries[1][1] - entries[0][1] * entries[1][0];
}

HeckeMatrix HeckeMatrix::substitute(const std::string& name, const Poly& value) const {
  HeckeMatrix m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m.entries[i][j] = entries[i][j].substitute(name, value);
  return m;
}

HeckeMatrix lr_matrix() {
  Poly p = P();
  Poly diag = Poly::var(symbols::t1) + (p + 1) * (p.pow(2) + 1);
  HeckeMatrix m;
  m.entries[0][0] = Poly(-2) * diag;
  m.entries[0][1] = Poly(-2) * (p + 1) * Poly::var(symbols::t02);
  m.entries[1][0] = Poly(-2) * (p + 1) * Poly::var(symbols::t20);
  m.entries[1][1] = Poly(-2) * diag;
  return m;
}

HeckeMatrix lr_matrix(std::int64_t p) { return lr_matrix().substitute(symbols::p, Poly(big(p))); }

HeckeMatrix ss_matrix() {
  Poly p = P();
  Poly composite = Poly::var(symbols::t20) * Poly::var(symbols::t02);
  Poly k = Poly(4) * p.pow(2) * (p + 1).pow(2);
  HeckeMatrix m;
  m.entries[0][0] = k + composite;
  m.entries[0][1] = Poly(-4) * p * (p + 1) * Poly::var(symbols::t02);
  m.entries[1][0] = Poly(-4) * p * (p + 1) * Poly::var(symbols::t20);
  m.entries[1][1] = k + composite;
  return m;
}

HeckeMatrix ss_matrix(std::int64_t p) { return ss_matrix().substitute(symbols::p, Poly(big(p))); }

Poly expand_composite(const Poly& x) {
  Poly p = P();
  Poly composite = Poly::var(symbols::t2sq) + (p + 1) * Poly::var(symbols::t1) + (p.pow(2) + 1) * (p + 1);
  Poly out;
  for (const auto& [m, coef] : x.terms()) {
    auto exponent = [&](const std::string& v) {
      auto it = m.find(v);
      return it == m.end() ? 0 : it->second;
    };
    int k = exponent(symbols::t02);
    if (k != exponent(symbols::t20) || k < 0)
      throw std::invalid_argument("T02 and T20 are not spherical; only their composite can be evaluated");
    Poly::Monomial rest = m;
    rest.erase(symbols::t02);
    rest.erase(symbols::t20);
    out += Poly::term(coef, rest) * composite.pow(static_cast<unsigned>(k));
  }
  return out;
}

Poly specialize_to_eigenvalues(const Poly& x) {
  Poly p = P(), a1 = Poly::var("a1"), a2 = Poly::var("a2");
  Poly y = expand_composite(x);
  y = y.substitute(symbols::t2sq, a2.pow(2) - (p + 1) * a1 - (p + 1) * (p.pow(2) + 1));
  return y.substitute(symbols::t1, a1);
}

DeterminantValue det_lr_eval(const EigenData& e, std::optional<std::int64_t> ell) {
  e.validate();
  if (ell) check_ell(*ell);
  DeterminantValue d;
  d.value = specialize_to_eigenvalues(lr_matrix().determinant()).evaluate(values_of(e));
  if (ell) d.residue = residue(d.value, *ell);
  return d;
}

DeterminantValue det_ss_eval(const EigenData& e, std::optional<std::int64_t> ell) {
  e.validate();
  if (ell) check_ell(*ell);
  DeterminantValue d;
  d.value = specialize_to_eigenvalues(ss_matrix().determinant()).evaluate(values_of(e));
  if (ell) d.residue = residue(d.value, *ell);
  return d;
}

std::vector<IdentityCheck> det_lr_identities() {
  Poly p = P(), a1 = Poly::var("a1"), a2 = Poly::var("a2");
  Poly s1 = Poly::var("s1"), s2 = Poly::var("s2");
  Poly c = p * (p + 1);
  Poly det = specialize_to_eigenvalues(lr_matrix().determinant());
  Poly closed = Poly(4) * ((a1 + (p + 1) * (p.pow(2) + 1)).pow(2) - (p + 1).pow(2) * a2.pow(2));

  Poly in_sums = det.substitute("a2", s1 + s2).substitute("a1", a1_in_pair_sums());
  Poly squares = Poly(4) * (s1.pow(2) - c.pow(2)) * (s2.pow(2) - c.pow(2));
  Poly linear(4);
  for (int u : {1, -1}) linear *= (s1 - Poly(u) * c) * (s2 - Poly(u) * c);

  return {compare("det_lr closed form", det, closed),
          compare("p^2 det_lr in pair sums", p.pow(2) * in_sums, squares),
          compare("det_lr as product over u", in_sums, Poly::var(symbols::p, -2) * linear)};
}

std::vector<IdentityCheck> det_ss_identities() {
  Poly p = P(), a2 = Poly::var("a2");
  Poly c = p * (p + 1);
  Poly det = specialize_to_eigenvalues(ss_matrix().determinant());
  Poly expanded = (a2.pow(2) + Poly(4) * c.pow(2)).pow(2) - Poly(16) * c.pow(2) * a2.pow(2);
  Poly closed = (a2.pow(2) - Poly(4) * c.pow(2)).pow(2);
  Poly linear(1);
  for (int u : {1, -1}) linear *= (a2 - Poly(2 * u) * c).pow(2);
  return {compare("det_ss from the matrix", det, expanded), compare("det_ss closed form", expanded, closed),
          compare("det_ss as product over u", closed, linear)};
}

std::vector<IdentityCheck> pair_quadratic_identities() {
  Poly x = Poly::var("X"), p = P();
  Poly s1 = Poly::var("s1"), s2 = Poly::var("s2");
  Poly res = resultant(pair_quadratic_symbolic("Y"), x.pow(2) - Poly::var("Y") * x + p.pow(3), "Y");
  Poly quartic = hecke_polynomial_symbolic().substitute("a0", Poly(1));
  Poly product = (x.pow(2) - s1 * x + p.pow(3)) * (x.pow(2) - s2 * x + p.pow(3));
  // the same quartic with a2 = s1 + s2 and p a1 = s1 s2 - p + p^3
  Poly from_sums = quartic.substitute("a2", s1 + s2).substitute("a1", a1_in_pair_sums());
  return {compare("resultant of R and X^2 - Y X + p^3", res, quartic),
          compare("X^2 coefficient", product.coefficient_of("X", 2), s1 * s2 + Poly(2) * p.pow(3)),
          compare("quartic from pair sums", from_sums, product)};
}

}  // namespace gsp4
