#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <unistd.h>

#include "gsp4/cache.hpp"
#include "gsp4/chains.hpp"
#include "gsp4/finite_field.hpp"
#include "gsp4/oracle.hpp"

using namespace gsp4;
using namespace gsp4::coweights;

namespace {

RatMatrix from_ints(const std::array<std::array<int, 4>, 4>& a) {
  RatMatrix m{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = a[i][j];
  return m;
}

RatMatrix random_basis(std::mt19937_64& rng, int p) {
  std::uniform_int_distribution<int> entry(-p * p, p * p);
  std::uniform_int_distribution<int> shift(-2, 2);
  for (;;) {
    RatMatrix m{};
    for (auto& row : m)
      for (auto& x : row) x = entry(rng);
    for (int j = 0; j < 4; ++j) {
      int s = shift(rng);
      Rational f = s >= 0 ? Rational(boost::multiprecision::pow(BigInt(p), s))
                          : Rational(BigInt(1), boost::multiprecision::pow(BigInt(p), -s));
      for (int i = 0; i < 4; ++i) m[i][j] *= f;
    }
    if (determinant(m) != 0) return m;
  }
}

// Random element of GL4(Z_(p)): unimodular integer steps and unit scalings.
RatMatrix random_change(std::mt19937_64& rng, int p) {
  RatMatrix g = identity_matrix();
  std::uniform_int_distribution<int> idx(0, 3), coef(-3, 3);
  for (int step = 0; step < 8; ++step) {
    int a = idx(rng), b = idx(rng);
    if (a == b) continue;
    RatMatrix e = identity_matrix();
    e[a][b] = coef(rng);
    g = multiply(g, e);
  }
  int unit = p == 2 ? 3 : p + 1;
  RatMatrix d = identity_matrix();
  d[0][0] = unit;
  d[2][2] = Rational(1, unit);
  return multiply(g, d);
}

}  // namespace

TEST_CASE("canonical form examples") {
  auto lam = canonicalize(identity_matrix(), 2);
  CHECK(lam == PadicLattice::standard(2));
  auto perm = from_ints({{{0, 1, 0, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 0, 1, 0}}});
  CHECK(canonicalize(perm, 2) == lam);
  auto scaled = canonicalize(diagonal_matrix(2, {1, 1, 1, 1}), 2);
  CHECK(scaled != lam);
  CHECK(scaled == lam.scaled(1));
  CHECK(scaled.contains(lam.scaled(2)));
  CHECK_FALSE(scaled.contains(lam));
  CHECK_THROWS_AS(canonicalize(RatMatrix{}, 2), std::invalid_argument);
  CHECK_THROWS_AS(canonicalize(identity_matrix(), 4), std::invalid_argument);
}

TEST_CASE("canonical form is idempotent and basis independent") {
  std::mt19937_64 rng(7);
  for (int p : {2, 3}) {
    for (int trial = 0; trial < 60; ++trial) {
      RatMatrix b = random_basis(rng, p);
      auto l = canonicalize(b, p);
      CHECK(canonicalize(l.basis(), p) == l);
      CHECK(canonicalize(multiply(b, random_change(rng, p)), p) == l);
      CHECK(l.contains(l.scaled(1)));
      Rational d = determinant(b);
      CHECK(l.volume_exponent() == valuation(numerator(d), p) - valuation(denominator(d), p));
    }
  }
}

TEST_CASE("dual lattice") {
  for (int p : {2, 3}) {
    auto lam = PadicLattice::standard(p);
    CHECK(dual_lattice(lam) == lam);
    CHECK(dual_lattice(lam.scaled(1)) == lam.scaled(-1));
    auto l = canonicalize(diagonal_matrix(p, {1, 1, 0, 0}), p);
    CHECK(dual_lattice(l) == l.scaled(-1));
  }
  std::mt19937_64 rng(11);
  for (int p : {2, 3})
    for (int trial = 0; trial < 60; ++trial) {
      auto l = canonicalize(random_basis(rng, p), p);
      CHECK(dual_lattice(dual_lattice(l)) == l);
    }
}

TEST_CASE("classification") {
  for (int p : {2, 3}) {
    auto c0 = classify(PadicLattice::standard(p));
    CHECK(c0.gsp.scaling_exponent == 0);
    CHECK(c0.vertex == VertexType::type0);
    auto c1 = classify(canonicalize(diagonal_matrix(p, {1, 1, 1, 1}), p));
    CHECK(c1.gsp.scaling_exponent == 2);
    CHECK(c1.vertex == VertexType::type0);
    auto c2 = classify(canonicalize(diagonal_matrix(p, {1, 1, 0, 0}), p));
    CHECK(c2.gsp.scaling_exponent == 1);
    CHECK(c2.vertex == VertexType::type2);
    auto pa = classify(canonicalize(diagonal_matrix(p, {1, 0, 0, 0}), p));
    CHECK_FALSE(pa.gsp.scaling_exponent.has_value());
    CHECK(pa.vertex == VertexType::type1);
    auto odd = classify(canonicalize(diagonal_matrix(p, {2, 0, 0, 0}), p));
    CHECK(odd.vertex == VertexType::none);
  }
}

TEST_CASE("relative position") {
  for (int p : {2, 3}) {
    auto lam = PadicLattice::standard(p);
    CHECK(relative_position(lam, lam.scaled(1)) == nu0);
    CHECK(relative_position(lam, canonicalize(diagonal_matrix(p, {1, 1, 0, 0}), p)) == nu2);
    CHECK(relative_position(lam, canonicalize(diagonal_matrix(p, {2, 1, 1, 0}), p)) == nu1);
    CHECK_THROWS_AS(relative_position(lam, canonicalize(diagonal_matrix(p, {1, 0, 0, 0}), p)), std::domain_error);
  }
}

TEST_CASE("relative position reverses under swapping") {
  for (int p : {2, 3})
    for (const auto& mu : {nu2, nu1, two_nu2, DominantCoweight(2, 1, 0, -1)})
      for (const auto& l : coset_representatives(p, mu, 4, 5)) {
        auto a = relative_position(PadicLattice::standard(p), l);
        auto b = relative_position(l, PadicLattice::standard(p));
        CHECK(a == mu);
        CHECK(b == DominantCoweight(-a[3], -a[2], -a[1], -a[0]));
      }
}

TEST_CASE("enumeration around the standard lattice") {
  auto lam2 = PadicLattice::standard(2);
  auto e2 = enumerate_at_position(lam2, nu2);
  CHECK(e2.size() == 15);
  auto e0 = enumerate_at_position(lam2, nu0);
  REQUIRE(e0.size() == 1);
  CHECK(e0.front() == lam2.scaled(1));
  CHECK(enumerate_at_position(PadicLattice::standard(3), nu2).size() == 40);
  CHECK(enumerate_at_position(lam2, coweights::central(-1)).front() == lam2.scaled(-1));

  for (int p : {2, 3})
    for (const auto& mu : {nu0, nu2, nu1, two_nu2, DominantCoweight(2, 1, 0, -1)}) {
      auto lam = PadicLattice::standard(p);
      auto all = enumerate_at_position(lam, mu);
      std::set<PadicLattice> distinct(all.begin(), all.end());
      CHECK(distinct.size() == all.size());
      for (const auto& l : all) {
        CHECK(relative_position(lam, l) == mu);
        CHECK(classify(l).gsp.scaling_exponent == mu.similitude());
      }
      CHECK(enumerate_at_position(lam, mu) == all);
    }
}

TEST_CASE("enumeration cross-checks the lattice count between p Lambda and Lambda") {
  for (int p : {2, 3}) {
    auto lam = PadicLattice::standard(p);
    std::size_t lagrangian = 0;
    for (const auto& l : enumerate_between(lam, lam.scaled(1), 2))
      if (classify(l).gsp.scaling_exponent == 1) ++lagrangian;
    CHECK(lagrangian == enumerate_at_position(lam, nu2).size());
  }
}

TEST_CASE("coset counts") {
  // T_{p,1} degree is a regression value: p + p^2 + p^3 + p^4 observed
  CHECK(coset_count(2, nu1) == 30);
  CHECK(coset_count(3, nu1) == 120);
  CHECK(coset_count(2, two_nu2) == 120);
  CHECK(coset_count(3, two_nu2) == 1080);
}

TEST_CASE("enumeration window") {
  auto lam = PadicLattice::standard(2);
  CHECK_THROWS_AS(enumerate_at_position(lam, DominantCoweight(3, 1, 0, -2)), WindowError);
  CHECK_THROWS_AS(enumerate_at_position(lam, two_nu2, 1), WindowError);
  CHECK_NOTHROW(enumerate_at_position(lam, nu2, 1));
  CHECK_THROWS_AS(convolve_oracle(two_nu2, nu2, 2, 1), WindowError);
}

TEST_CASE("enumeration around other basepoints") {
  for (int p : {2, 3}) {
    auto base = coset_representatives(p, nu1, 3, 17);
    base.push_back(canonicalize(diagonal_matrix(p, {1, 1, 0, 0}), p));
    for (const auto& center : base) {
      auto around = enumerate_at_position(center, nu2);
      CHECK(around.size() == static_cast<std::size_t>((p + 1) * (p * p + 1)));
      for (std::size_t i = 0; i < around.size(); i += 7) CHECK(relative_position(center, around[i]) == nu2);
    }
  }
}

TEST_CASE("symplectic frame") {
  for (int p : {2, 3})
    for (const auto& l : coset_representatives(p, two_nu2, 3, 3)) {
      RatMatrix g = symplectic_frame(l);
      CHECK(canonicalize(g, p) == l);
      RatMatrix gram = multiply(multiply(transpose(g), symplectic_form()), g);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(gram[i][j] == Rational(p * p) * symplectic_form()[i][j]);
    }
  CHECK_THROWS_AS(symplectic_frame(canonicalize(diagonal_matrix(2, {1, 0, 0, 0}), 2)), std::invalid_argument);
}

TEST_CASE("convolution examples") {
  auto c2 = convolve_oracle(nu2, nu2, 2);
  CHECK(c2.coefficients == std::map<DominantCoweight, BigInt>{{two_nu2, 1}, {nu1, 3}, {nu0, 15}});
  auto c3 = convolve_oracle(nu2, nu2, 3);
  CHECK(c3.coefficients == std::map<DominantCoweight, BigInt>{{two_nu2, 1}, {nu1, 4}, {nu0, 40}});
  for (int p : {2, 3}) {
    auto z = convolve_oracle(nu0, nu2, p);
    CHECK(z.coefficients == std::map<DominantCoweight, BigInt>{{DominantCoweight(2, 2, 1, 1), 1}});
  }
  // agrees with the symbolic product evaluated at p
  auto sym = verify_hecke_identity().square;
  for (const auto& [lambda, n] : c3.coefficients) CHECK(evaluate_integer(sym.coefficient(lambda), 3) == n);
  CHECK(c2.as_hecke().coefficient(nu1) == Scalar(3));
}

TEST_CASE("convolution properties") {
  for (int p : {2, 3}) {
    for (const auto& [mu, nu] : {std::pair{nu2, nu1}, std::pair{nu0, nu1}, std::pair{nu2, two_nu2}}) {
      if (p == 3 && mu == nu2 && nu == two_nu2) continue;
      auto ab = convolve_oracle(mu, nu, p);
      auto ba = convolve_oracle(nu, mu, p);
      CHECK(ab.coefficients == ba.coefficients);

      BigInt mass = 0;
      for (const auto& [lambda, n] : ab.coefficients) mass += n * coset_count(p, lambda);
      CHECK(mass == BigInt(coset_count(p, mu)) * coset_count(p, nu));

      for (const auto& [lambda, n] : ab.coefficients)
        for (const auto& target : coset_representatives(p, lambda, 4, 99))
          CHECK(convolution_coefficient(mu, nu, target) == n);
    }
  }
}

TEST_CASE("iwasawa invariant") {
  for (int p : {2, 3}) {
    auto lam = PadicLattice::standard(p);
    CHECK(iwasawa_invariant(lam.scaled(1)) == Weight(1, 1, 1, 1));
    CHECK(iwasawa_invariant(canonicalize(diagonal_matrix(p, {1, 1, 0, 0}), p)) == Weight(1, 1, 0, 0));

    // off the dominant stratum the flag invariant and the Cartan position differ
    auto low = canonicalize(diagonal_matrix(p, {0, 0, 1, 1}), p);
    CHECK(iwasawa_invariant(low) == Weight(0, 0, 1, 1));
    CHECK(relative_position(lam, low) == nu2);

    // diag(p,p,1,1) n Lambda with n = 1 + p^-2 (E13 + E24) symplectic unipotent
    RatMatrix n = identity_matrix();
    n[0][2] = n[1][3] = Rational(1, p * p);
    auto tilted = canonicalize(multiply(diagonal_matrix(p, {1, 1, 0, 0}), n), p);
    CHECK(classify(tilted).gsp.scaling_exponent == 1);
    CHECK(iwasawa_invariant(tilted) == Weight(1, 1, 0, 0));
    CHECK(relative_position(lam, tilted) == DominantCoweight(2, 2, -1, -1));
  }
}

TEST_CASE("satake oracle") {
  auto s = satake_oracle(nu2, 2);
  CHECK(s.sign == -1);
  CHECK(s.stratum_counts == std::map<Weight, BigInt>{{Weight(1, 1, 0, 0), 8},
                                                     {Weight(1, 0, 1, 0), 4},
                                                     {Weight(0, 1, 0, 1), 2},
                                                     {Weight(0, 0, 1, 1), 1}});
  for (const auto& [w, v] : s.coefficients) CHECK(v == evaluate(Scalar::q_power(3), 2));

  for (int p : {2, 3})
    for (const auto& mu : {nu0, nu2, nu1, two_nu2}) {
      auto r = satake_oracle(mu, p);
      CHECK(r.coefficients == evaluate(satake_table(mu), p));
    }
  auto one = satake_oracle(nu0, 3);
  CHECK(one.stratum_counts == std::map<Weight, BigInt>{{nu0.weight(), 1}});
  auto s1 = satake_oracle(nu1, 2);
  CHECK(s1.coefficients.at(nu0.weight()) == evaluate(Scalar::q_power(4) - 1, 2));
}

TEST_CASE("chain patterns") {
  for (int p : {2, 3, 5}) {
    std::size_t full = static_cast<std::size_t>((p + 1) * (p * p + 1));
    CHECK(count_chain_pattern("kl-index", p) == full);
    CHECK(count_chain_pattern("sie-index", p) == full);
    CHECK(count_chain_pattern("type1-under-type0", p) == full);
    CHECK(count_chain_pattern("lines-in-2-space", p) == static_cast<std::size_t>(p + 1));
    CHECK(count_chain_pattern("type2-under-type1", p) == static_cast<std::size_t>(p + 1));
  }
  CHECK_THROWS_AS(count_chain_pattern("no-such-pattern", 2), std::invalid_argument);
  CHECK_THROWS_AS(count_chain_pattern("type2-between-type0-pairs", 2), std::invalid_argument);
  CHECK_THROWS_AS(count_chain_pattern("type2-between-type0-pairs", 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(count_chain_pattern("kl-index", 2, 4), std::invalid_argument);
  CHECK(parse_chain_pattern("sie-index") == ChainPattern::sie_index);
  CHECK(to_string(ChainPattern::lines_in_2_space) == "lines-in-2-space");
}

TEST_CASE("type 0 pairs through a common type 2 lattice") {
  for (int p : {2, 3}) {
    auto cases = tally_type0_pairs(p);
    REQUIRE(cases.size() == 3);
    CHECK(cases.at(0).multiplicity == 1);
    CHECK(cases.at(2).multiplicity == static_cast<std::size_t>(p + 1));
    CHECK(cases.at(4).multiplicity == static_cast<std::size_t>((p + 1) * (p * p + 1)));
    CHECK(cases.at(0).position == DominantCoweight(1, 1, -1, -1));
    CHECK(cases.at(2).position == DominantCoweight(1, 0, 0, -1));
    CHECK(cases.at(4).position == coweights::central(0));
    CHECK(cases.at(4).partners == 1);
    // the partners of each case are exactly the coset K lambda K / K
    CHECK(cases.at(0).partners == coset_count(p, DominantCoweight(1, 1, -1, -1)));
    CHECK(cases.at(2).partners == coset_count(p, DominantCoweight(1, 0, 0, -1)));
    for (int d : {0, 2, 4}) CHECK(count_chain_pattern("type2-between-type0-pairs", p, d) == cases.at(d).multiplicity);
  }
}

TEST_CASE("finite fields") {
  for (auto [p, k] : {std::pair{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 2}, {5, 1}, {7, 2}}) {
    FiniteField f(p, k);
    int q = f.size();
    for (int a = 1; a < q; ++a) {
      CHECK(f.pow(a, q - 1) == 1);
      CHECK(f.add(a, f.sub(0, a)) == 0);
    }
  }
  CHECK_THROWS_AS(FiniteField(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(FiniteField(2, 9), std::out_of_range);
}

TEST_CASE("Deligne-Lusztig surface point counts") {
  CHECK(dl_point_count(2, 1) == 15);
  CHECK(dl_point_count(3, 1) == 40);
  CHECK(dl_point_count(5, 1) == 156);
  // independent count over GF(p^k): all nonzero solutions divided by q - 1
  for (auto [p, k] : {std::pair{2, 2}, {3, 2}, {2, 3}, {2, 4}}) {
    FiniteField f(p, k);
    int q = f.size();
    std::int64_t affine = 0;
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b)
        for (int c = 0; c < q; ++c)
          for (int d = 0; d < q; ++d) {
            if (a == 0 && b == 0 && c == 0 && d == 0) continue;
            int v = f.add(f.sub(f.mul(f.pow(d, p), a), f.mul(f.pow(a, p), d)),
                          f.sub(f.mul(f.pow(c, p), b), f.mul(f.pow(b, p), c)));
            if (v == 0) ++affine;
          }
    CHECK(dl_point_count(p, k) == affine / (q - 1));
  }
  CHECK_THROWS_AS(dl_point_count(2, 5), std::out_of_range);
  CHECK_THROWS_AS(dl_point_count(17, 1), std::out_of_range);
  CHECK_THROWS_AS(dl_point_count(6, 1), std::invalid_argument);
}

TEST_CASE("convolution cache") {
  auto dir = std::filesystem::temp_directory_path() / ("gsp4_cache_test_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  ConvolutionCache cache(dir);
  CHECK_FALSE(cache.load(2, nu2, nu2).has_value());
  auto direct = convolve_oracle(nu2, nu2, 2);
  auto first = convolve_cached(nu2, nu2, 2, &cache);
  CHECK(first == direct);
  REQUIRE(std::filesystem::exists(cache.entry_path(2, nu2, nu2)));
  auto again = cache.load(2, nu2, nu2);
  REQUIRE(again.has_value());
  CHECK(*again == direct);
  CHECK(convolve_cached(nu2, nu2, 2, &cache) == direct);
  CHECK(convolve_cached(nu2, nu2, 2, nullptr) == direct);

  {
    std::ifstream in(cache.entry_path(2, nu2, nu2));
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text.find("\"format_version\": 1") != std::string::npos);
    CHECK(text.find("\"15\"") != std::string::npos);
  }
  {
    std::ofstream out(cache.entry_path(2, nu2, nu2));
    out << R"x({"format_version": 99, "p": 2, "mu": "(1,1,0,0)", "nu": "(1,1,0,0)", "coefficients": {}})x";
  }
  CHECK_FALSE(cache.load(2, nu2, nu2).has_value());
  {
    std::ofstream out(cache.entry_path(2, nu2, nu2));
    out << "not json";
  }
  CHECK_FALSE(cache.load(2, nu2, nu2).has_value());
  CHECK(convolve_cached(nu2, nu2, 2, &cache) == direct);
  CHECK(cache.load(2, nu2, nu2).has_value());
  std::filesystem::remove_all(dir);
}
