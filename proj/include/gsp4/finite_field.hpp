#pragma once

#include <cstdint>
#include <vector>

namespace gsp4 {

/// GF(p^k) with elements encoded as integers 0 .. p^k - 1 (base-p digits are
/// coefficients of a polynomial basis). Intended for small fields.
class FiniteField {
 public:
  /// Throws std::invalid_argument for a non-prime p or k < 1, and
  /// std::out_of_range when p^k exceeds 256.
  FiniteField(int p, int k);

  int characteristic() const { return p_; }
  int degree() const { return k_; }
  int size() const { return q_; }
  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add(a, neg_[b]); }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int pow(int a, std::int64_t e) const;
  /// The defining polynomial, lowest coefficient first, monic of degree k.
  const std::vector<int>& modulus() const { return modulus_; }

 private:
  int p_, k_, q_;
  std::vector<int> modulus_;
  std::vector<int> add_, mul_, neg_;
};

/// Points over GF(p^k) of the projective surface
/// Z3^p Z0 - Z0^p Z3 + Z2^p Z1 - Z1^p Z2 = 0, by exhaustive enumeration.
/// Throws std::out_of_range when p^k > 16.
std::int64_t dl_point_count(int p, int k);

}  // namespace gsp4
