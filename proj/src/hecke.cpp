#include "gsp4/hecke.hpp"

#include <sstream>
#include <stdexcept>

namespace gsp4 {

namespace {

bool is_central(const DominantCoweight& nu) { return nu[0] == nu[3]; }

// 1 + q^2 + ... in p = q^2 notation.
Scalar p_plus_one() { return Scalar::p_power(1) + 1; }
Scalar p_sq_plus_one() { return Scalar::p_power(2) + 1; }

}  // namespace

bool in_satake_table(const DominantCoweight& nu) {
  using namespace coweights;
  return is_central(nu) || nu == nu2 || nu == nu1 || nu == two_nu2;
}

CharacterElement satake_table(const DominantCoweight& nu) {
  using namespace coweights;
  if (is_central(nu)) return CharacterElement::central(nu[0]);
  if (nu == nu2) return Scalar::q_power(3) * weyl_character(nu2);
  if (nu == nu1) return Scalar::q_power(4) * weyl_character(nu1) - CharacterElement::central(1);
  if (nu == two_nu2)
    return Scalar::q_power(6) * weyl_character(two_nu2) - satake_table(nu1) -
           CharacterElement::central(1, Scalar(1) + Scalar::q_power(4));
  throw std::out_of_range("no tabulated Satake transform for " + nu.to_string());
}

CharacterElement satake(const HeckeElement& h) {
  CharacterElement r;
  for (const auto& [nu, c] : h.terms()) r += c * satake_table(nu);
  return r;
}

HeckeElement satake_inverse(const CharacterElement& x) {
  HeckeElement out;
  CharacterElement rest = x;
  while (!rest.is_zero()) {
    const Weight* best = nullptr;
    for (const auto& [w, c] : rest.terms()) {
      if (!w.is_dominant()) continue;
      if (best == nullptr || w.similitude() > best->similitude() ||
          (w.similitude() == best->similitude() && w.two_rho_pairing() > best->two_rho_pairing()))
        best = &w;
    }
    if (best == nullptr) throw std::logic_error("invariant element without dominant weight");
    DominantCoweight nu(*best);
    if (!in_satake_table(nu)) throw std::out_of_range("inverse Satake needs untabulated " + nu.to_string());
    Scalar c = rest.coefficient(*best).divided_by_q_power(nu.two_rho_pairing());
    out += HeckeElement::basis(nu, c);
    rest -= c * satake_table(nu);
  }
  return out;
}

HeckeElement hecke_multiply(const HeckeElement& x, const HeckeElement& y) {
  return satake_inverse(char_mul(satake(x), satake(y)));
}

HeckeIdentityCertificate verify_hecke_identity() {
  using namespace coweights;
  HeckeIdentityCertificate cert;
  CharacterElement s_nu2 = satake_table(nu2);
  cert.lhs = char_mul(s_nu2, s_nu2);
  // The constant (p+1)(p^2+1) multiplies c_nu0: every term has similitude 2.
  cert.rhs = satake_table(two_nu2) + p_plus_one() * satake_table(nu1) +
             (p_plus_one() * p_sq_plus_one()) * satake_table(nu0);
  cert.expected = Scalar::q_power(6) * (weyl_character(two_nu2) + weyl_character(nu1) + CharacterElement::central(1));
  cert.square = satake_inverse(cert.lhs);

  auto mismatch = [](const CharacterElement& a, const CharacterElement& b, const char* label)
      -> std::optional<std::string> {
    std::map<Weight, std::pair<Scalar, Scalar>> all;
    for (const auto& [w, c] : a.terms()) all[w].first = c;
    for (const auto& [w, c] : b.terms()) all[w].second = c;
    for (const auto& [w, pair] : all)
      if (pair.first != pair.second)
        return std::string(label) + " differ at e" + w.to_string() + ": " + pair.first.to_string() + " vs " +
               pair.second.to_string();
    return std::nullopt;
  };
  cert.first_mismatch = mismatch(cert.lhs, cert.rhs, "lhs/rhs");
  if (!cert.first_mismatch) cert.first_mismatch = mismatch(cert.lhs, cert.expected, "lhs/expected");
  cert.passed = !cert.first_mismatch.has_value();
  return cert;
}

std::string SqrtPValue::to_string() const {
  std::ostringstream out;
  out << rational.str();
  if (radical != 0) out << (radical < 0 ? " - " : " + ") << Rational(boost::multiprecision::abs(radical)).str() << "*sqrt(p)";
  return out.str();
}

SqrtPValue evaluate(const Scalar& s, int p) {
  SqrtPValue v;
  for (const auto& [e, c] : s.terms()) {
    // q^e = p^{floor(e/2)} * sqrt(p)^{e mod 2}
    int half = e >= 0 ? e / 2 : -((-e + 1) / 2);
    bool odd = (e - 2 * half) == 1;
    Rational term = c;
    BigInt pk = boost::multiprecision::pow(BigInt(p), half >= 0 ? half : -half);
    if (half >= 0)
      term *= pk;
    else
      term /= pk;
    (odd ? v.radical : v.rational) += term;
  }
  return v;
}

std::optional<BigInt> evaluate_integer(const Scalar& s, int p) {
  SqrtPValue v = evaluate(s, p);
  if (v.radical != 0 || denominator(v.rational) != 1) return std::nullopt;
  return numerator(v.rational);
}

}  // namespace gsp4
