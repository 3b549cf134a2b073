#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "gsp4/enumerate.hpp"
#include "gsp4/hecke.hpp"

namespace gsp4 {

/// Coefficients of c_mu * c_nu in the double coset basis, computed by counting
/// lattices at a concrete prime.
struct ConvolutionResult {
  int p = 2;
  DominantCoweight mu, nu;
  std::map<DominantCoweight, BigInt> coefficients;

  /// The same coefficients as constant Scalars.
  HeckeElement as_hecke() const;
  friend bool operator==(const ConvolutionResult&, const ConvolutionResult&) = default;
};

/// #{L' : pos(Lambda, L') = mu and pos(L', target) = nu}.
BigInt convolution_coefficient(const DominantCoweight& mu, const DominantCoweight& nu, const PadicLattice& target,
                               int window = kDefaultWindow);

/// For each dominant lambda <= mu + nu, the coefficient above with target
/// lambda(p) Lambda; zero coefficients are omitted.
ConvolutionResult convolve_oracle(const DominantCoweight& mu, const DominantCoweight& nu, int p,
                                  int window = kDefaultWindow);

/// Distinct lattices k lambda(p) Lambda for random k in Sp4(Z), starting with
/// lambda(p) Lambda itself; all lie in K lambda(p) K / K.
std::vector<PadicLattice> coset_representatives(int p, const DominantCoweight& lambda, std::size_t count,
                                                std::uint64_t seed);

/// Numerical Satake transform at a fixed prime.
struct SatakeOracleResult {
  int p = 2;
  DominantCoweight mu;
  /// Exponent sign s: coefficient of e^lambda is count * q^{s * 2<lambda,rho>}.
  int sign = -1;
  std::map<Weight, BigInt> stratum_counts;
  std::map<Weight, SqrtPValue> coefficients;
};

/// The sign for which the nu2 strata reproduce q^3 chi_nu2 at p. Throws
/// std::logic_error when neither or both signs match.
int pinned_satake_sign(int p);

SatakeOracleResult satake_oracle(const DominantCoweight& mu, int p, int window = kDefaultWindow);

/// Coefficientwise value of a character element at q = sqrt(p).
std::map<Weight, SqrtPValue> evaluate(const CharacterElement& x, int p);

}  // namespace gsp4
