#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace gsp4 {

/// Exact Laurent polynomial in q with integer coefficients.
///
/// The ring parameter p is always represented as q^2, so half-integral powers
/// of p (p^{3/2} = q^3) live here without fractional exponents. Zero
/// coefficients are never stored.
class Scalar {
 public:
  Scalar() = default;
  Scalar(std::int64_t constant);  // NOLINT(google-explicit-constructor)

  static Scalar monomial(std::int64_t coefficient, int exponent);
  static Scalar q_power(int exponent) { return monomial(1, exponent); }
  /// p^k = q^{2k}.
  static Scalar p_power(int k) { return monomial(1, 2 * k); }

  const std::map<int, std::int64_t>& terms() const { return terms_; }
  std::int64_t coefficient(int exponent) const;
  bool is_zero() const { return terms_.empty(); }
  /// True when every stored coefficient is positive.
  bool is_nonnegative() const;
  bool is_constant() const;
  int max_exponent() const;  // requires !is_zero()
  int min_exponent() const;  // requires !is_zero()

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend bool operator==(const Scalar&, const Scalar&) = default;

  /// Multiplies by q^shift.
  Scalar shifted(int shift) const;

  /// Exact division by a monomial q^shift with coefficient +-1.
  Scalar divided_by_q_power(int shift) const { return shifted(-shift); }

  /// Canonical text, highest exponent first: "q^3 + 2 - q^-1".
  std::string to_string() const;
  static Scalar parse(const std::string& text);

 private:
  void add_term(int exponent, std::int64_t coefficient);
  std::map<int, std::int64_t> terms_;
};

}  // namespace gsp4
