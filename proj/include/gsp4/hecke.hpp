#pragma once

#include <optional>
#include <string>

#include "gsp4/bigint.hpp"
#include "gsp4/character.hpp"

namespace gsp4 {

/// True for the coweights whose Satake transform is tabulated:
/// k*nu0 (any k), nu2, nu1 and 2*nu2.
bool in_satake_table(const DominantCoweight& nu);

/// Satake transform S(c_nu) on the tabulated span:
///   S(c_{k nu0}) = e^{k nu0}
///   S(c_{nu2})   = q^3 chi_{nu2}
///   S(c_{nu1})   = q^4 chi_{nu1} - e^{nu0}
///   S(c_{2nu2})  = q^6 chi_{2nu2} - S(c_{nu1}) - (1 + q^4) e^{nu0}
/// Throws std::out_of_range outside the span.
CharacterElement satake_table(const DominantCoweight& nu);

/// Linear extension of satake_table to Hecke elements supported on the span.
CharacterElement satake(const HeckeElement& h);

/// Inverse Satake on the span: strips the highest dominant weight nu, whose
/// coefficient in S(c_nu) is q^{2<nu,rho>}. Throws std::out_of_range when a
/// coweight outside the span is needed or a leading coefficient fails to
/// divide.
HeckeElement satake_inverse(const CharacterElement& x);

/// Product in the spherical Hecke algebra, computed through the Satake
/// isomorphism; both factors and the result must lie in the span.
HeckeElement hecke_multiply(const HeckeElement& x, const HeckeElement& y);

struct HeckeIdentityCertificate {
  bool passed = false;
  CharacterElement lhs;       // S(c_nu2)^2
  CharacterElement rhs;       // S(c_2nu2) + (p+1) S(c_nu1) + (p+1)(p^2+1) S(c_nu0)
  CharacterElement expected;  // q^6 (chi_2nu2 + chi_nu1 + e^nu0)
  HeckeElement square;        // c_nu2 * c_nu2 in the double coset basis
  std::optional<std::string> first_mismatch;
};

/// Symbolic check of c_nu2^2 = c_2nu2 + (p+1) c_nu1 + (p+1)(p^2+1) c_nu0.
HeckeIdentityCertificate verify_hecke_identity();

/// A value a + b*sqrt(p) with rational a, b: the result of setting q = sqrt(p).
struct SqrtPValue {
  Rational rational;
  Rational radical;
  friend bool operator==(const SqrtPValue&, const SqrtPValue&) = default;
  std::string to_string() const;
};

SqrtPValue evaluate(const Scalar& s, int p);

/// The integer value of s at q = sqrt(p), or nullopt when it is not an integer.
std::optional<BigInt> evaluate_integer(const Scalar& s, int p);

}  // namespace gsp4
