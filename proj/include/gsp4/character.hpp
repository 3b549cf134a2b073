#pragma once

#include <map>
#include <string>

#include "gsp4/scalar.hpp"
#include "gsp4/weight.hpp"

namespace gsp4 {

/// Element of the Weyl-invariant character ring of the dual group with Scalar
/// coefficients: a finitely supported function Weight -> Scalar.
class CharacterElement {
 public:
  using Terms = std::map<Weight, Scalar>;

  CharacterElement() = default;
  /// Throws std::invalid_argument when `terms` is not Weyl invariant.
  explicit CharacterElement(const Terms& terms);

  /// coefficient * (sum of e^x over the Weyl orbit of w).
  static CharacterElement orbit_sum(const Weight& w, const Scalar& coefficient = 1);
  /// e^{k nu0}: the only monomials that are Weyl invariant on their own.
  static CharacterElement central(int k, const Scalar& coefficient = 1);

  const Terms& terms() const { return terms_; }
  Scalar coefficient(const Weight& w) const;
  bool is_zero() const { return terms_.empty(); }
  /// Sum of all coefficients (the dimension, for an honest character).
  Scalar mass() const;
  bool is_weyl_invariant() const;

  CharacterElement operator-() const;
  CharacterElement& operator+=(const CharacterElement& o);
  CharacterElement& operator-=(const CharacterElement& o);
  friend CharacterElement operator+(CharacterElement a, const CharacterElement& b) { return a += b; }
  friend CharacterElement operator-(CharacterElement a, const CharacterElement& b) { return a -= b; }
  friend CharacterElement operator*(const Scalar& s, const CharacterElement& x);
  friend bool operator==(const CharacterElement&, const CharacterElement&) = default;

  /// "q^3 e(1,1,0,0) + ..." ordered by weight, highest first.
  std::string to_string() const;

 private:
  void add(const Weight& w, const Scalar& c);
  Terms terms_;
};

/// Pointwise convolution of weight functions (the ring product).
CharacterElement char_mul(const CharacterElement& x, const CharacterElement& y);

/// Exact weight multiplicities of the irreducible dual-group representation
/// with highest weight nu (Freudenthal recursion).
CharacterElement weyl_character(const DominantCoweight& nu);

/// Highest-weight multiplicities m with sum m(nu) weyl_character(nu) = x.
/// Throws std::domain_error if a stripped multiplicity has a negative
/// coefficient, i.e. x is not an honest (Scalar-valued) character.
std::map<DominantCoweight, Scalar> char_decompose(const CharacterElement& x);

/// Finitely supported function DominantCoweight -> Scalar in the double coset
/// basis c_nu of the spherical Hecke algebra.
class HeckeElement {
 public:
  using Terms = std::map<DominantCoweight, Scalar>;

  HeckeElement() = default;
  explicit HeckeElement(const Terms& terms);
  static HeckeElement basis(const DominantCoweight& nu, const Scalar& coefficient = 1);

  const Terms& terms() const { return terms_; }
  Scalar coefficient(const DominantCoweight& nu) const;

  HeckeElement& operator+=(const HeckeElement& o);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator*(const Scalar& s, const HeckeElement& x);
  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

  /// "c(2,2,0,0) + (q^2 + 1)c(2,1,1,0)" ordered by coweight, highest first.
  std::string to_string() const;

 private:
  void add(const DominantCoweight& nu, const Scalar& c);
  Terms terms_;
};

}  // namespace gsp4
