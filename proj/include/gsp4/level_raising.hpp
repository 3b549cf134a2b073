#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsp4/polynomial.hpp"

namespace gsp4 {

/// Spherical Hecke eigenvalues at p with trivial central character (a0 = 1).
struct EigenData {
  std::optional<std::string> label;
  std::int64_t p = 2;
  BigInt a1;  // T_{p,1}
  BigInt a2;  // T_{p,2}

  static constexpr int a0 = 1;
  /// Throws std::invalid_argument unless p is prime.
  void validate() const;
};

/// X^4 - a2 X^3 + (p a1 + (p^3+p) a0) X^2 - p^3 a0 a2 X + p^6 a0^2 in the
/// indeterminates X, p, a0, a1, a2.
Poly hecke_polynomial_symbolic();
/// The same with the data substituted; a polynomial in X only.
Poly hecke_polynomial(const EigenData& e);

/// R(Y) = Y^2 - a2 Y + (p a1 + p - p^3), whose roots are the pair sums
/// alpha + p^3/alpha and beta + p^3/beta.
struct PairQuadratic {
  BigInt linear;    // -a2
  BigInt constant;  // p a1 + p - p^3
  BigInt operator()(const BigInt& y) const { return y * y + linear * y + constant; }
  Poly as_poly(const std::string& variable = "Y") const;
};
PairQuadratic pair_quadratic(const EigenData& e);
/// R with p, a1, a2 left as indeterminates.
Poly pair_quadratic_symbolic(const std::string& variable = "Y");

class NonTemperedError : public std::domain_error {
 public:
  explicit NonTemperedError(int u);
  int u() const { return u_; }

 private:
  int u_;
};

struct ConditionFlags {
  bool ell_differs_from_p = false;
  bool ell_coprime = false;          // l does not divide p^2 - 1
  bool congruence = false;           // R(u c) = 0 mod l
  bool alpha_noncongruence = false;  // complementary pair sum != +-c mod l
  bool trace_noncongruence = false;  // a2 != +-2c mod l
};

struct BranchReport {
  int u = 1;
  BigInt pair_value;  // R(u c) in the integers
  ConditionFlags flags;
  bool special = false;
  std::optional<int> depth;
};

struct WeilLint {
  bool within_bound = false;
  std::string note;
};

extern const char* const kAssumptionCaveat;

struct LevelRaisingReport {
  EigenData input;
  std::int64_t ell = 3;
  bool special = false;
  std::optional<int> u;
  std::optional<int> depth;
  ConditionFlags condition_flags;
  std::vector<BranchReport> branches;
  bool generic_nonlr = false;
  WeilLint weil;
  std::string assumption_caveat = kAssumptionCaveat;
};

/// Level-raising-special test with c = p + p^2. Both signs u are examined
/// unless u_hint is given. Throws NonTemperedError when R(u c) vanishes in
/// the integers for an examined u, std::invalid_argument for an even or
/// composite l or invalid data.
LevelRaisingReport check_level_raising(const EigenData& e, std::int64_t ell, std::optional<int> u_hint = std::nullopt);

/// |s_i| <= 2 p^{3/2} for both pair sums, decided without extracting roots.
WeilLint weil_lint(const EigenData& e);

struct GenericReport {
  bool generic_nonlr = false;  // R(c) and R(-c) both nonzero mod l
  bool generic_lr = false;     // level raising special
  std::optional<int> u;
  bool non_tempered = false;
  std::string assumption_caveat = kAssumptionCaveat;
};
GenericReport check_generic(const EigenData& e, std::int64_t ell);

/// Variable names used in Hecke matrices.
namespace symbols {
inline const std::string p = "p";
inline const std::string t1 = "T0inv_T1";     // T0^-1 T_{p,1}
inline const std::string t02 = "T02";
inline const std::string t20 = "T20";
inline const std::string t2sq = "T0inv_Tp2_2";  // T0^-1 T_{p^2,2}
}  // namespace symbols

struct HeckeMatrix {
  std::array<std::array<Poly, 2>, 2> entries;
  Poly determinant() const;
  HeckeMatrix substitute(const std::string& name, const Poly& value) const;
  friend bool operator==(const HeckeMatrix&, const HeckeMatrix&) = default;
};

HeckeMatrix lr_matrix();
HeckeMatrix lr_matrix(std::int64_t p);
HeckeMatrix ss_matrix();
HeckeMatrix ss_matrix(std::int64_t p);

/// Rewrites (T02 T20)^k using T20 T02 = T0^-1 T_{p^2,2} + (p+1) T0^-1 T_{p,1} + (p^2+1)(p+1).
/// Throws std::invalid_argument if T02 and T20 occur with unequal powers.
Poly expand_composite(const Poly& x);

/// Specializes a determinant to eigenvalues: T0 = 1, T_{p,1} -> a1 and
/// T_{p^2,2} -> a2^2 - (p+1) a1 - (p+1)(p^2+1) from the square identity.
Poly specialize_to_eigenvalues(const Poly& x);

struct DeterminantValue {
  BigInt value;
  std::optional<BigInt> residue;  // value mod l when l is given
};
/// 4[(a1 + (p+1)(p^2+1))^2 - (p+1)^2 a2^2].
DeterminantValue det_lr_eval(const EigenData& e, std::optional<std::int64_t> ell = std::nullopt);
/// (a2^2 - 4p^2(p+1)^2)^2.
DeterminantValue det_ss_eval(const EigenData& e, std::optional<std::int64_t> ell = std::nullopt);

struct IdentityCheck {
  std::string name;
  bool holds = false;
  Poly lhs, rhs;
};

/// p^2 det T_lr = 4 (s1^2 - p^2(p+1)^2)(s2^2 - p^2(p+1)^2) after a2 = s1 + s2,
/// p a1 = s1 s2 - p + p^3; also against the product over u of the linear factors.
std::vector<IdentityCheck> det_lr_identities();
/// det T_ss = (a2^2 - 4p^2(p+1)^2)^2 = prod_u (a2 - 2u p(p+1))^2.
std::vector<IdentityCheck> det_ss_identities();
/// Res_Y(R(Y), X^2 - Y X + p^3) equals the Hecke polynomial at a0 = 1, and
/// the X^2 coefficient of (X^2 - s1 X + p^3)(X^2 - s2 X + p^3) is s1 s2 + 2p^3.
std::vector<IdentityCheck> pair_quadratic_identities();

}  // namespace gsp4
