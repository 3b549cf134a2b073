#pragma once

#include <map>
#include <string>
#include <vector>

#include "gsp4/bigint.hpp"

namespace gsp4 {

/// Sparse Laurent polynomial with BigInt coefficients in named commuting
/// variables. A monomial maps variable names to nonzero exponents.
class Poly {
 public:
  using Monomial = std::map<std::string, int>;

  Poly() = default;
  Poly(std::int64_t constant);  // NOLINT(google-explicit-constructor)
  Poly(const BigInt& constant);  // NOLINT(google-explicit-constructor)

  static Poly var(const std::string& name, int exponent = 1);
  static Poly term(const BigInt& coefficient, Monomial monomial);

  const std::map<Monomial, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of an exact monomial (zero if absent).
  BigInt coefficient(const Monomial& m) const;
  /// Highest exponent of a variable, 0 for the zero polynomial.
  int degree(const std::string& name) const;
  /// Coefficient of name^k, as a polynomial in the other variables.
  Poly coefficient_of(const std::string& name, int k) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend bool operator==(const Poly&, const Poly&) = default;

  Poly pow(unsigned n) const;

  /// Replaces every occurrence of the variable by value; negative powers of
  /// the variable need value to be a single monomial with coefficient +-1.
  Poly substitute(const std::string& name, const Poly& value) const;

  /// Integer value once every variable is assigned; throws
  /// std::invalid_argument if a variable is missing or a negative power does
  /// not divide exactly.
  BigInt evaluate(const std::map<std::string, BigInt>& values) const;

  /// Deterministic text, e.g. "4*p^2*T02*T20 - 3 + p^-1".
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const BigInt& c);
  std::map<Monomial, BigInt> terms_;
};

/// Resultant in the given variable via the Sylvester determinant.
Poly resultant(const Poly& a, const Poly& b, const std::string& name);

}  // namespace gsp4
