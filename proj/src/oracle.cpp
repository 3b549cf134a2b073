#include "gsp4/oracle.hpp"

#include <mutex>
#include <random>
#include <set>

namespace gsp4 {

namespace {

// Relative positions pos(L, target) for many L with a fixed target.
class PositionProbe {
 public:
  explicit PositionProbe(const PadicLattice& target)
      : p_(target.prime()), inv_target_(inverse(target.basis())) {}

  DominantCoweight from(const PadicLattice& l) const {
    // Divisors of B_t^{-1} B_l are the negatives of those of B_l^{-1} B_t.
    auto d = elementary_divisors(multiply(inv_target_, l.basis()), p_);
    return DominantCoweight(-d[3], -d[2], -d[1], -d[0]);
  }

 private:
  int p_;
  RatMatrix inv_target_;
};

std::map<Weight, BigInt> iwasawa_strata(const DominantCoweight& mu, int p, int window) {
  std::map<Weight, BigInt> counts;
  for (const auto& l : enumerate_at_position(PadicLattice::standard(p), mu, window)) counts[iwasawa_invariant(l)] += 1;
  return counts;
}

std::map<Weight, SqrtPValue> weigh(const std::map<Weight, BigInt>& counts, int sign, int p) {
  std::map<Weight, SqrtPValue> out;
  for (const auto& [w, n] : counts) {
    SqrtPValue v = evaluate(Scalar::q_power(sign * w.two_rho_pairing()), p);
    v.rational *= n;
    v.radical *= n;
    out[w] = v;
  }
  return out;
}

}  // namespace

HeckeElement ConvolutionResult::as_hecke() const {
  HeckeElement h;
  for (const auto& [lambda, n] : coefficients) h += HeckeElement::basis(lambda, Scalar(static_cast<std::int64_t>(n)));
  return h;
}

BigInt convolution_coefficient(const DominantCoweight& mu, const DominantCoweight& nu, const PadicLattice& target,
                               int window) {
  const int p = target.prime();
  PositionProbe probe(target);
  BigInt count = 0;
  for (const auto& l : enumerate_at_position(PadicLattice::standard(p), mu, window))
    if (probe.from(l) == nu) ++count;
  return count;
}

ConvolutionResult convolve_oracle(const DominantCoweight& mu, const DominantCoweight& nu, int p, int window) {
  ConvolutionResult r;
  r.p = p;
  r.mu = mu;
  r.nu = nu;
  enumerate_at_position(PadicLattice::standard(p), nu, window);  // window check on nu
  DominantCoweight top(mu.weight() + nu.weight());
  for (const auto& lambda : dominant_weights_below(top)) {
    BigInt n = convolution_coefficient(mu, nu, torus_lattice(p, lambda.weight()), window);
    if (n != 0) r.coefficients[lambda] = n;
  }
  return r;
}

std::vector<PadicLattice> coset_representatives(int p, const DominantCoweight& lambda, std::size_t count,
                                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-1, 1);
  const PadicLattice start = torus_lattice(p, lambda.weight());
  const RatMatrix& j = symplectic_form();
  std::vector<PadicLattice> out{start};
  std::set<PadicLattice> seen{start};
  for (int attempt = 0; out.size() < count && attempt < 1000; ++attempt) {
    RatMatrix g = identity_matrix();
    for (int step = 0; step < 4; ++step) {
      // transvection x -> x + J(x, v) v
      std::array<Rational, 4> v;
      for (auto& x : v) x = entry(rng);
      RatMatrix t = identity_matrix();
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
          for (int k = 0; k < 4; ++k) t[r][c] += v[r] * j[c][k] * v[k];
      g = multiply(t, g);
    }
    PadicLattice l = transform(g, start);
    if (seen.insert(l).second) out.push_back(l);
  }
  return out;
}

int pinned_satake_sign(int p) {
  static std::mutex mutex;
  static std::map<int, int> pinned;
  std::lock_guard lock(mutex);
  if (auto it = pinned.find(p); it != pinned.end()) return it->second;
  auto counts = iwasawa_strata(coweights::nu2, p, kDefaultWindow);
  auto target = evaluate(satake_table(coweights::nu2), p);
  std::vector<int> matches;
  for (int sign : {-1, 1})
    if (weigh(counts, sign, p) == target) matches.push_back(sign);
  if (matches.size() != 1)
    throw std::logic_error("Satake normalization anchor failed at p=" + std::to_string(p) + ": " +
                           std::to_string(matches.size()) + " exponent signs reproduce q^3 chi_nu2");
  pinned[p] = matches.front();
  return matches.front();
}

SatakeOracleResult satake_oracle(const DominantCoweight& mu, int p, int window) {
  SatakeOracleResult r;
  r.p = p;
  r.mu = mu;
  r.sign = pinned_satake_sign(p);
  r.stratum_counts = iwasawa_strata(mu, p, window);
  r.coefficients = weigh(r.stratum_counts, r.sign, p);
  return r;
}

std::map<Weight, SqrtPValue> evaluate(const CharacterElement& x, int p) {
  std::map<Weight, SqrtPValue> out;
  for (const auto& [w, c] : x.terms()) {
    SqrtPValue v = evaluate(c, p);
    if (v.rational != 0 || v.radical != 0) out[w] = v;
  }
  return out;
}

}  // namespace gsp4
