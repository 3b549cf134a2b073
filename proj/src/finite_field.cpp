#include "gsp4/finite_field.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "gsp4/bigint.hpp"

namespace gsp4 {

namespace {

std::vector<int> digits(int a, int p, int k) {
  std::vector<int> d(k);
  for (int i = 0; i < k; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

int encode(const std::vector<int>& d, int p) {
  int a = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) a = a * p + d[i];
  return a;
}

// product of a and b in F_p[x] / (modulus), modulus monic of degree k
int poly_mul(int a, int b, int p, int k, const std::vector<int>& modulus) {
  auto x = digits(a, p, k), y = digits(b, p, k);
  std::vector<int> prod(2 * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  for (int deg = 2 * k - 1; deg >= k; --deg) {
    int c = prod[deg];
    if (c == 0) continue;
    for (int i = 0; i <= k; ++i) prod[deg - k + i] = ((prod[deg - k + i] - c * modulus[i]) % p + p) % p;
  }
  prod.resize(k);
  return encode(prod, p);
}

}  // namespace

FiniteField::FiniteField(int p, int k) : p_(p), k_(k) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
  if (k < 1) throw std::invalid_argument("field degree must be positive");
  long long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > 256) throw std::out_of_range("field too large for table arithmetic");
  }
  q_ = static_cast<int>(q);

  // Smallest monic modulus of degree k whose quotient ring has no zero divisors.
  for (int tail = 0; tail < q_; ++tail) {
    modulus_ = digits(tail, p, k);
    modulus_.push_back(1);
    bool field = true;
    for (int a = 1; a < q_ && field; ++a)
      for (int b = a; b < q_; ++b)
        if (poly_mul(a, b, p, k, modulus_) == 0) {
          field = false;
          break;
        }
    if (field) break;
  }

  add_.resize(static_cast<std::size_t>(q_) * q_);
  mul_.resize(static_cast<std::size_t>(q_) * q_);
  neg_.resize(q_);
  for (int a = 0; a < q_; ++a) {
    auto x = digits(a, p, k);
    for (auto& c : x) c = (p - c) % p;
    neg_[a] = encode(x, p);
    for (int b = 0; b < q_; ++b) {
      auto s = digits(a, p, k), t = digits(b, p, k);
      for (int i = 0; i < k; ++i) s[i] = (s[i] + t[i]) % p;
      add_[a * q_ + b] = encode(s, p);
      mul_[a * q_ + b] = poly_mul(a, b, p, k, modulus_);
    }
  }
}

int FiniteField::pow(int a, std::int64_t e) const {
  int r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::int64_t dl_point_count(int p, int k) {
  if (!is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
  if (k < 1) throw std::invalid_argument("degree must be positive");
  long long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > 16) throw std::out_of_range("p^k must be at most 16 for exhaustive enumeration");
  }
  FiniteField f(p, k);
  const int n = f.size();
  std::vector<int> frob(n);
  for (int a = 0; a < n; ++a) frob[a] = f.pow(a, p);
  auto value = [&](const std::array<int, 4>& z) {
    int t1 = f.sub(f.mul(frob[z[3]], z[0]), f.mul(frob[z[0]], z[3]));
    int t2 = f.sub(f.mul(frob[z[2]], z[1]), f.mul(frob[z[1]], z[2]));
    return f.add(t1, t2);
  };
  std::int64_t count = 0;
  // projective points normalized so the first nonzero coordinate is 1
  for (int lead = 0; lead < 4; ++lead) {
    int free = 3 - lead;
    std::int64_t total = 1;
    for (int i = 0; i < free; ++i) total *= n;
    for (std::int64_t code = 0; code < total; ++code) {
      std::array<int, 4> z{};
      z[lead] = 1;
      std::int64_t rest = code;
      for (int i = lead + 1; i < 4; ++i) {
        z[i] = static_cast<int>(rest % n);
        rest /= n;
      }
      if (value(z) == 0) ++count;
    }
  }
  return count;
}

}  // namespace gsp4
