#include "gsp4/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "gsp4/checked.hpp"
#include "padic_detail.hpp"

namespace gsp4 {

using detail::checked_pow;

namespace {

int rational_valuation(const Rational& r, int p) {
  if (r == 0) throw std::domain_error("valuation of zero");
  return valuation(numerator(r), p) - valuation(denominator(r), p);
}

BigInt big_pow(int p, int e) { return boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(e)); }

Rational p_power(int p, int e) {
  return e >= 0 ? Rational(big_pow(p, e)) : Rational(BigInt(1), big_pow(p, -e));
}

using Vec = std::array<Rational, 4>;

Vec column(const RatMatrix& m, int j) { return {m[0][j], m[1][j], m[2][j], m[3][j]}; }

Rational form(const Vec& x, const Vec& y) {
  // J(e1,e4) = J(e2,e3) = 1
  return x[0] * y[3] + x[1] * y[2] - x[2] * y[1] - x[3] * y[0];
}

// Hermite reduction of the lattice spanned by the columns of m together with
// p^E Z^4; entries of m are residues modulo p^E.
struct HermiteResult {
  std::array<std::array<BigInt, 4>, 4> h;
  std::array<int, 4> k;
};

// m holds the generators as columns (4 rows, any number of columns).
HermiteResult hermite_mod(std::array<std::vector<BigInt>, 4> m, int p, int e) {
  const BigInt mod = big_pow(p, e);
  std::vector<int> remaining;
  for (std::size_t c = 0; c < m[0].size(); ++c) remaining.push_back(static_cast<int>(c));
  std::array<std::array<BigInt, 4>, 4> cols{};  // cols[j] = column chosen for row j
  HermiteResult out;
  for (int i = 3; i >= 0; --i) {
    int best = e + 1;
    std::size_t pick = 0;
    for (std::size_t n = 0; n < remaining.size(); ++n) {
      int v = detail::valuation_capped(m[i][remaining[n]], p, e);
      if (v < best) {
        best = v;
        pick = n;
      }
    }
    if (best >= e) throw std::logic_error("Hermite modulus too small");
    int pc = remaining[pick];
    BigInt pk = big_pow(p, best);
    BigInt uinv = detail::inverse_mod<BigInt>(m[i][pc] / pk, mod);
    for (int r = 0; r < 4; ++r) m[r][pc] = mod_floor(m[r][pc] * uinv, mod);
    for (int c : remaining) {
      if (c == pc || m[i][c] == 0) continue;
      BigInt f = m[i][c] / pk;
      for (int r = 0; r < 4; ++r) m[r][c] = mod_floor(m[r][c] - f * m[r][pc], mod);
    }
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
    for (int r = 0; r < 4; ++r) cols[i][r] = m[r][pc];
    out.k[i] = best;
  }
  for (int j = 0; j < 4; ++j) {
    for (int i = j - 1; i >= 0; --i) {
      BigInt pki = big_pow(p, out.k[i]);
      BigInt q = cols[j][i] / pki;
      if (mod_floor(cols[j][i], pki) != cols[j][i] - q * pki) q -= 1;  // floor for negatives
      if (q != 0)
        for (int r = 0; r <= i; ++r) cols[j][r] -= q * cols[i][r];
    }
  }
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out.h[i][j] = cols[j][i];
  return out;
}

PadicLattice from_big_hermite(int p, int shift, std::array<std::array<BigInt, 4>, 4> h) {
  for (;;) {
    bool divisible = true;
    for (const auto& row : h)
      for (const auto& x : row)
        if (x % p != 0) divisible = false;
    if (!divisible) break;
    for (auto& row : h)
      for (auto& x : row) x /= p;
    --shift;
  }
  IntMatrix small{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (h[i][j] > std::numeric_limits<std::int64_t>::max())
        throw std::overflow_error("lattice entries exceed 64 bits");
      small[i][j] = static_cast<std::int64_t>(h[i][j]);
    }
  return make_lattice(p, shift, small);
}

// Scales a rational matrix into integer residues modulo p^E:
// returns (t, d, E, residues) with m = p^{d - t} * (unit-equivalent residues).
struct IntegralForm {
  int t = 0;  // m * p^t has p-integral entries
  int d = 0;  // common p-valuation removed after scaling
  int e = 0;  // modulus exponent, larger than every elementary divisor
  std::array<std::array<BigInt, 4>, 4> residues;
};

IntegralForm integral_form(const RatMatrix& m, int p) {
  Rational det = determinant(m);
  if (det == 0) throw std::invalid_argument("singular basis");
  IntegralForm f;
  int min_val = std::numeric_limits<int>::max();
  for (const auto& row : m)
    for (const auto& x : row) {
      if (x == 0) continue;
      int v = rational_valuation(x, p);
      min_val = std::min(min_val, v);
      f.t = std::max(f.t, valuation(denominator(x), p));
    }
  f.d = min_val + f.t;
  int shift = f.t - f.d;  // net power of p applied to entries
  int det_val = rational_valuation(det, p) + 4 * shift;
  f.e = det_val + 1;
  BigInt mod = big_pow(p, f.e);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Rational x = m[i][j] * p_power(p, shift);
      if (x == 0) {
        f.residues[i][j] = 0;
        continue;
      }
      BigInt den = denominator(x);
      f.residues[i][j] = mod_floor(numerator(x) * detail::inverse_mod<BigInt>(den, mod), mod);
    }
  return f;
}

}  // namespace

RatMatrix identity_matrix() {
  RatMatrix m{};
  for (int i = 0; i < 4; ++i) m[i][i] = 1;
  return m;
}

RatMatrix diagonal_matrix(int p, const std::array<int, 4>& exponents) {
  RatMatrix m{};
  for (int i = 0; i < 4; ++i) m[i][i] = p_power(p, exponents[i]);
  return m;
}

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix c{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < 4; ++j)
        if (b[k][j] != 0) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

RatMatrix transpose(const RatMatrix& a) {
  RatMatrix t{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t[i][j] = a[j][i];
  return t;
}

Rational determinant(const RatMatrix& a) {
  RatMatrix m = a;
  Rational det = 1;
  for (int c = 0; c < 4; ++c) {
    int pivot = -1;
    for (int r = c; r < 4; ++r)
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (int r = c + 1; r < 4; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (int k = c; k < 4; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

RatMatrix inverse(const RatMatrix& a) {
  RatMatrix m = a, inv = identity_matrix();
  for (int c = 0; c < 4; ++c) {
    int pivot = -1;
    for (int r = c; r < 4; ++r)
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::invalid_argument("singular matrix");
    std::swap(m[pivot], m[c]);
    std::swap(inv[pivot], inv[c]);
    Rational d = m[c][c];
    for (int k = 0; k < 4; ++k) {
      m[c][k] /= d;
      inv[c][k] /= d;
    }
    for (int r = 0; r < 4; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (int k = 0; k < 4; ++k) {
        m[r][k] -= f * m[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

const RatMatrix& symplectic_form() {
  static const RatMatrix j = [] {
    RatMatrix m{};
    m[0][3] = 1;
    m[1][2] = 1;
    m[2][1] = -1;
    m[3][0] = -1;
    return m;
  }();
  return j;
}

PadicLattice PadicLattice::standard(int p) {
  IntMatrix h{};
  for (int i = 0; i < 4; ++i) h[i][i] = 1;
  return make_lattice(p, 0, h);
}

PadicLattice make_lattice(int p, int shift, const IntMatrix& h) {
  if (!is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
  PadicLattice l;
  l.p_ = p;
  l.s_ = shift;
  l.h_ = h;
  bool divisible = true;
  for (int i = 0; i < 4; ++i) {
    std::int64_t d = h[i][i];
    int k = 0;
    while (d > 1 && d % p == 0) {
      d /= p;
      ++k;
    }
    if (d != 1) throw std::invalid_argument("Hermite diagonal must be a power of p");
    l.k_[i] = k;
    for (int j = 0; j < 4; ++j) {
      if (j < i && h[i][j] != 0) throw std::invalid_argument("Hermite form must be upper triangular");
      if (j > i && (h[i][j] < 0 || h[i][j] >= h[i][i])) throw std::invalid_argument("Hermite entry out of range");
      if (h[i][j] % p != 0) divisible = false;
    }
  }
  if (divisible) throw std::invalid_argument("Hermite form not normalized");
  return l;
}

RatMatrix PadicLattice::basis() const {
  RatMatrix b{};
  Rational scale = p_power(p_, -s_);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (h_[i][j] != 0) b[i][j] = scale * h_[i][j];
  return b;
}

PadicLattice PadicLattice::scaled(int e) const {
  PadicLattice l = *this;
  l.s_ -= e;
  return l;
}

bool PadicLattice::contains(const PadicLattice& other) const {
  if (other.p_ != p_) throw std::invalid_argument("lattices over different primes");
  // other column j is p^{-s'} h'_j; test p^{s - s'} h'_j in H Z_p^4.
  Rational scale = p_power(p_, s_ - other.s_);
  for (int j = 0; j < 4; ++j) {
    std::array<Rational, 4> w;
    for (int i = 0; i < 4; ++i) w[i] = scale * other.h_[i][j];
    for (int i = 3; i >= 0; --i) {
      if (w[i] == 0) continue;
      Rational coef = w[i] / h_[i][i];
      if (rational_valuation(coef, p_) < 0) return false;
      for (int r = 0; r <= i; ++r)
        if (h_[r][i] != 0) w[r] -= coef * h_[r][i];
    }
  }
  return true;
}

int PadicLattice::volume_exponent() const {
  return k_[0] + k_[1] + k_[2] + k_[3] - 4 * s_;
}

int PadicLattice::colength_in(const PadicLattice& outer) const {
  if (!outer.contains(*this)) throw std::invalid_argument("lattice is not contained in the outer lattice");
  return volume_exponent() - outer.volume_exponent();
}

std::string PadicLattice::to_string() const {
  std::ostringstream out;
  out << "p^" << -s_ << " * [";
  for (int i = 0; i < 4; ++i) {
    if (i) out << "; ";
    for (int j = 0; j < 4; ++j) out << (j ? " " : "") << h_[i][j];
  }
  out << "]";
  return out.str();
}

PadicLattice canonicalize(const RatMatrix& basis, int p) {
  if (!is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
  IntegralForm f = integral_form(basis, p);
  std::array<std::vector<BigInt>, 4> gens;
  for (int i = 0; i < 4; ++i) gens[i].assign(f.residues[i].begin(), f.residues[i].end());
  HermiteResult h = hermite_mod(gens, p, f.e);
  // residues represent p^{t - d} * basis
  return from_big_hermite(p, f.t - f.d, h.h);
}

PadicLattice dual_lattice(const PadicLattice& lattice) {
  RatMatrix bj = multiply(transpose(lattice.basis()), symplectic_form());
  return canonicalize(inverse(bj), lattice.prime());
}

std::string to_string(VertexType t) {
  switch (t) {
    case VertexType::type0: return "type0";
    case VertexType::type1: return "type1";
    case VertexType::type2: return "type2";
    case VertexType::none: return "none";
  }
  return "none";
}

Classification classify(const PadicLattice& lattice) {
  Classification out;
  PadicLattice dual = dual_lattice(lattice);
  int gap = lattice.volume_exponent() - dual.volume_exponent();
  if (gap % 4 == 0 && dual == lattice.scaled(-gap / 4)) out.gsp.scaling_exponent = gap / 4;

  // p^t L has colength gap + 8t in its dual; a vertex lattice needs it in [0, 4].
  int t = gap >= 0 ? -(gap / 8) : (-gap + 7) / 8;
  int colength = gap + 8 * t;
  if (colength < 0 || colength > 4) return out;
  PadicLattice l = lattice.scaled(t);
  PadicLattice d = dual.scaled(-t);
  if (!d.contains(l) || !l.contains(d.scaled(1))) return out;
  if (colength == 0) out.vertex = VertexType::type0;
  else if (colength == 2) out.vertex = VertexType::type1;
  else if (colength == 4) out.vertex = VertexType::type2;
  return out;
}

std::array<int, 4> elementary_divisors(const RatMatrix& m, int p) {
  IntegralForm f = integral_form(m, p);
  std::array<int, 4> vals;
  if (detail::fits_int64(p, f.e)) {
    std::int64_t mod = checked_pow(p, f.e);
    std::array<std::array<std::int64_t, 4>, 4> a;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) a[i][j] = static_cast<std::int64_t>(f.residues[i][j]);
    vals = detail::smith_valuations<std::int64_t>(a, p, f.e, mod);
  } else {
    vals = detail::smith_valuations<BigInt>(f.residues, p, f.e, big_pow(p, f.e));
  }
  for (int& v : vals) v += f.d - f.t;
  std::sort(vals.begin(), vals.end(), std::greater<>());
  return vals;
}

DominantCoweight relative_position(const PadicLattice& l1, const PadicLattice& l2) {
  if (l1.prime() != l2.prime()) throw std::invalid_argument("lattices over different primes");
  auto v = elementary_divisors(multiply(inverse(l1.basis()), l2.basis()), l1.prime());
  if (v[0] + v[3] != v[1] + v[2])
    throw std::domain_error("elementary divisors (" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," +
                            std::to_string(v[2]) + "," + std::to_string(v[3]) +
                            ") violate the similitude constraint");
  return DominantCoweight(v[0], v[1], v[2], v[3]);
}

Weight iwasawa_invariant(const PadicLattice& lattice) {
  const auto& k = lattice.diagonal_exponents();
  int s = lattice.shift();
  return Weight(k[0] - s, k[1] - s, k[2] - s, k[3] - s);
}

RatMatrix symplectic_frame(const PadicLattice& lattice) {
  auto cls = classify(lattice);
  if (!cls.gsp.scaling_exponent) throw std::invalid_argument("lattice is not self-dual up to scaling");
  const int p = lattice.prime();
  Rational scale = p_power(p, -*cls.gsp.scaling_exponent);
  auto omega = [&](const Vec& x, const Vec& y) { return scale * form(x, y); };
  RatMatrix b = lattice.basis();
  std::vector<Vec> pool;
  for (int j = 0; j < 4; ++j) pool.push_back(column(b, j));

  auto split_pair = [&](std::vector<Vec>& vs) {
    Vec x = vs.front();
    for (std::size_t j = 1; j < vs.size(); ++j) {
      Rational w = omega(x, vs[j]);
      if (w == 0 || rational_valuation(w, p) != 0) continue;
      Vec y = vs[j];
      for (auto& c : y) c /= w;
      std::vector<Vec> rest;
      for (std::size_t n = 1; n < vs.size(); ++n) {
        if (n == j) continue;
        Vec z = vs[n];
        Rational zy = omega(z, y), zx = omega(z, x);
        for (int i = 0; i < 4; ++i) z[i] = z[i] - zy * x[i] + zx * y[i];
        rest.push_back(z);
      }
      vs = rest;
      return std::pair{x, y};
    }
    throw std::logic_error("no unimodular partner while building a symplectic frame");
  };
  auto [x1, y1] = split_pair(pool);
  auto [x2, y2] = split_pair(pool);
  RatMatrix g{};
  for (int i = 0; i < 4; ++i) {
    g[i][0] = x1[i];
    g[i][1] = x2[i];
    g[i][2] = y2[i];
    g[i][3] = y1[i];
  }
  return g;
}

PadicLattice transform(const RatMatrix& g, const PadicLattice& lattice) {
  return canonicalize(multiply(g, lattice.basis()), lattice.prime());
}

PadicLattice lattice_sum(const PadicLattice& a, const PadicLattice& b) {
  if (a.prime() != b.prime()) throw std::invalid_argument("lattices over different primes");
  const int p = a.prime();
  // Work in p^{s} coordinates with s the larger shift so both H's are integral;
  // a's scaled basis contains p^E Z^4.
  int s = std::max(a.shift(), b.shift());
  std::array<std::vector<BigInt>, 4> gens;
  for (const PadicLattice* l : {&a, &b}) {
    BigInt scale = big_pow(p, s - l->shift());
    for (int j = 0; j < 4; ++j)
      for (int i = 0; i < 4; ++i) gens[i].push_back(scale * l->hermite()[i][j]);
  }
  int e = a.volume_exponent() + 4 * s + 1;
  BigInt mod = big_pow(p, e);
  for (auto& row : gens)
    for (auto& x : row) x = mod_floor(x, mod);
  HermiteResult h = hermite_mod(gens, p, e);
  return from_big_hermite(p, s, h.h);
}

PadicLattice lattice_intersection(const PadicLattice& a, const PadicLattice& b) {
  return dual_lattice(lattice_sum(dual_lattice(a), dual_lattice(b)));
}

PadicLattice torus_lattice(int p, const Weight& mu) {
  const auto& a = mu.entries();
  int m = *std::min_element(a.begin(), a.end());
  IntMatrix h{};
  for (int i = 0; i < 4; ++i) h[i][i] = checked_pow(p, a[i] - m);
  return make_lattice(p, -m, h);
}

}  // namespace gsp4
