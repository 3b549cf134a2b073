#include "gsp4/character.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

#include "gsp4/checked.hpp"

namespace gsp4 {

namespace {

// Positive roots of the dual group GSpin(5), written in coweight coordinates,
// as (i, j) multiples of the simple roots (1,-1,1,-1) and (0,1,-1,0).
constexpr std::array<std::array<int, 2>, 4> kPositiveRoots{{{1, 0}, {0, 1}, {1, 1}, {1, 2}}};
constexpr std::array<int, 4> kTwoRhoDual{3, 1, -1, -3};

std::array<int, 4> from_simple(int i, int j) { return {i, j - i, i - j, -i}; }

int dot(const std::array<int, 4>& u, const std::array<int, 4>& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2] + u[3] * v[3];
}

std::array<int, 4> lowered(const Weight& top, int x, int y) {
  auto d = from_simple(x, y);
  return {top[0] - d[0], top[1] - d[1], top[2] - d[2], top[3] - d[3]};
}

// Higher weights print first within a similitude class.
struct HighestFirst {
  bool operator()(const Weight& a, const Weight& b) const {
    if (a.similitude() != b.similitude()) return a.similitude() > b.similitude();
    if (a.two_rho_pairing() != b.two_rho_pairing()) return a.two_rho_pairing() > b.two_rho_pairing();
    return a > b;
  }
};

std::string wrap_coefficient(const Scalar& c) {
  if (c == Scalar(1)) return "";
  if (c == Scalar(-1)) return "-";
  if (c.terms().size() == 1) return c.to_string() + " ";
  return "(" + c.to_string() + ") ";
}

}  // namespace

CharacterElement::CharacterElement(const Terms& terms) {
  for (const auto& [w, c] : terms) add(w, c);
  if (!is_weyl_invariant()) throw std::invalid_argument("character element is not Weyl invariant");
}

void CharacterElement::add(const Weight& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CharacterElement CharacterElement::orbit_sum(const Weight& w, const Scalar& coefficient) {
  CharacterElement r;
  for (const Weight& x : weyl_orbit(w)) r.add(x, coefficient);
  return r;
}

CharacterElement CharacterElement::central(int k, const Scalar& coefficient) {
  CharacterElement r;
  r.add(Weight(k, k, k, k), coefficient);
  return r;
}

Scalar CharacterElement::coefficient(const Weight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar{} : it->second;
}

Scalar CharacterElement::mass() const {
  Scalar m;
  for (const auto& [w, c] : terms_) m += c;
  return m;
}

bool CharacterElement::is_weyl_invariant() const {
  for (const auto& [w, c] : terms_)
    for (const Weight& x : {reflect_s1(w), reflect_s2(w), reflect_s3(w)})
      if (coefficient(x) != c) return false;
  return true;
}

CharacterElement CharacterElement::operator-() const { return Scalar(-1) * *this; }

CharacterElement& CharacterElement::operator+=(const CharacterElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

CharacterElement& CharacterElement::operator-=(const CharacterElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

CharacterElement operator*(const Scalar& s, const CharacterElement& x) {
  CharacterElement r;
  for (const auto& [w, c] : x.terms_) r.add(w, s * c);
  return r;
}

std::string CharacterElement::to_string() const {
  if (terms_.empty()) return "0";
  std::map<Weight, Scalar, HighestFirst> ordered(terms_.begin(), terms_.end());
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : ordered) {
    if (!first) out << " + ";
    first = false;
    out << wrap_coefficient(c) << "e" << w.to_string();
  }
  return out.str();
}

CharacterElement char_mul(const CharacterElement& x, const CharacterElement& y) {
  CharacterElement::Terms product;
  for (const auto& [w1, c1] : x.terms())
    for (const auto& [w2, c2] : y.terms()) {
      Scalar& slot = product[w1 + w2];
      slot += c1 * c2;
    }
  std::erase_if(product, [](const auto& kv) { return kv.second.is_zero(); });
  return CharacterElement(product);
}

CharacterElement weyl_character(const DominantCoweight& nu) {
  const Weight& top = nu.weight();
  // Depth box: every weight of V_nu is top - x*alpha1 - y*alpha2 with the
  // coordinates bounded by those of the orbit's members.
  int max_x = 0, max_y = 0;
  for (const Weight& w : weyl_orbit(top)) {
    int x = top[0] - w[0];
    int y = x + top[1] - w[1];
    max_x = std::max(max_x, x);
    max_y = std::max(max_y, y);
  }

  std::map<std::pair<int, int>, std::int64_t> mult;
  mult[{0, 0}] = 1;

  for (int depth = 1; depth <= max_x + max_y; ++depth) {
    for (int x = 0; x <= std::min(depth, max_x); ++x) {
      int y = depth - x;
      if (y > max_y) continue;
      auto mu = lowered(top, x, y);
      // (|nu + rho|^2 - |mu + rho|^2) = (nu - mu) . (nu + mu + 2 rho)
      std::array<int, 4> diff{}, sum{};
      for (int i = 0; i < 4; ++i) {
        diff[i] = top[i] - mu[i];
        sum[i] = top[i] + mu[i] + kTwoRhoDual[i];
      }
      std::int64_t denom = dot(diff, sum);
      std::int64_t numer = 0;
      for (const auto& [ri, rj] : kPositiveRoots) {
        auto alpha = from_simple(ri, rj);
        for (int k = 1; x - k * ri >= 0 && y - k * rj >= 0; ++k) {
          auto it = mult.find({x - k * ri, y - k * rj});
          if (it == mult.end() || it->second == 0) continue;
          std::array<int, 4> shifted{mu[0] + k * alpha[0], mu[1] + k * alpha[1], mu[2] + k * alpha[2],
                                     mu[3] + k * alpha[3]};
          numer = detail::checked_add(numer, detail::checked_mul(2 * it->second, dot(shifted, alpha)));
        }
      }
      if (denom == 0) {
        if (numer != 0) throw std::logic_error("Freudenthal recursion inconsistent at " + Weight(mu).to_string());
        continue;
      }
      if (numer % denom != 0) throw std::logic_error("Freudenthal recursion non-integral at " + Weight(mu).to_string());
      if (numer / denom != 0) mult[{x, y}] = numer / denom;
    }
  }

  CharacterElement::Terms terms;
  for (const auto& [xy, m] : mult)
    if (m != 0) terms[Weight(lowered(top, xy.first, xy.second))] = Scalar(m);
  return CharacterElement(terms);
}

std::map<DominantCoweight, Scalar> char_decompose(const CharacterElement& x) {
  std::map<DominantCoweight, Scalar> out;
  CharacterElement rest = x;
  while (!rest.is_zero()) {
    // Highest surviving dominant weight: maximal in the dominance order.
    const Weight* best = nullptr;
    for (const auto& [w, c] : rest.terms()) {
      if (!w.is_dominant()) continue;
      if (best == nullptr || HighestFirst{}(w, *best)) best = &w;
    }
    if (best == nullptr) throw std::logic_error("invariant element without dominant weight");
    DominantCoweight nu(*best);
    Scalar m = rest.coefficient(*best);
    if (!m.is_nonnegative())
      throw std::domain_error("negative multiplicity " + m.to_string() + " at " + nu.to_string() +
                              ": input is not a character");
    out[nu] = m;
    rest -= m * weyl_character(nu);
  }
  return out;
}

HeckeElement::HeckeElement(const Terms& terms) {
  for (const auto& [nu, c] : terms) add(nu, c);
}

HeckeElement HeckeElement::basis(const DominantCoweight& nu, const Scalar& coefficient) {
  HeckeElement h;
  h.add(nu, coefficient);
  return h;
}

void HeckeElement::add(const DominantCoweight& nu, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(nu, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar HeckeElement::coefficient(const DominantCoweight& nu) const {
  auto it = terms_.find(nu);
  return it == terms_.end() ? Scalar{} : it->second;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  for (const auto& [nu, c] : o.terms_) add(nu, c);
  return *this;
}

HeckeElement operator*(const Scalar& s, const HeckeElement& x) {
  HeckeElement r;
  for (const auto& [nu, c] : x.terms_) r.add(nu, s * c);
  return r;
}

std::string HeckeElement::to_string() const {
  if (terms_.empty()) return "0";
  std::map<Weight, Scalar, HighestFirst> ordered;
  for (const auto& [nu, c] : terms_) ordered.emplace(nu.weight(), c);
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : ordered) {
    if (!first) out << " + ";
    first = false;
    out << wrap_coefficient(c) << "c" << w.to_string();
  }
  return out.str();
}

}  // namespace gsp4
