#include "gsp4/polynomial.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

namespace gsp4 {

namespace {

Poly::Monomial multiply_monomials(const Poly::Monomial& a, const Poly::Monomial& b) {
  Poly::Monomial r = a;
  for (const auto& [v, e] : b) {
    int& slot = r[v];
    slot += e;
    if (slot == 0) r.erase(v);
  }
  return r;
}

Poly determinant(std::vector<std::vector<Poly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return Poly(1);
  if (n == 1) return m[0][0];
  Poly det;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    Poly t = m[0][col] * determinant(std::move(minor));
    if (col % 2) det -= t;
    else det += t;
  }
  return det;
}

}  // namespace

Poly::Poly(std::int64_t constant) { add_term({}, constant); }
Poly::Poly(const BigInt& constant) { add_term({}, constant); }

Poly Poly::var(const std::string& name, int exponent) {
  Monomial m;
  if (exponent != 0) m[name] = exponent;
  return term(1, std::move(m));
}

Poly Poly::term(const BigInt& coefficient, Monomial monomial) {
  for (auto it = monomial.begin(); it != monomial.end();)
    it = it->second == 0 ? monomial.erase(it) : std::next(it);
  Poly r;
  r.add_term(monomial, coefficient);
  return r;
}

void Poly::add_term(const Monomial& m, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int Poly::degree(const std::string& name) const {
  int d = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    auto it = m.find(name);
    int e = it == m.end() ? 0 : it->second;
    if (first || e > d) d = e;
    first = false;
  }
  return d;
}

Poly Poly::coefficient_of(const std::string& name, int k) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    auto it = m.find(name);
    int e = it == m.end() ? 0 : it->second;
    if (e != k) continue;
    Monomial rest = m;
    rest.erase(name);
    r.add_term(rest, c);
  }
  return r;
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& other) {
  Poly r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : other.terms_) r.add_term(multiply_monomials(m1, m2), c1 * c2);
  *this = std::move(r);
  return *this;
}

Poly Poly::pow(unsigned n) const {
  Poly r(1), base = *this;
  while (n) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

Poly Poly::substitute(const std::string& name, const Poly& value) const {
  std::optional<Poly> inverse;
  auto inverse_of_value = [&]() -> const Poly& {
    if (!inverse) {
      if (value.terms_.size() != 1 || abs(value.terms_.begin()->second) != 1)
        throw std::invalid_argument("negative power of " + name + " needs a unit monomial substitute");
      Monomial m;
      for (const auto& [v, e] : value.terms_.begin()->first) m[v] = -e;
      inverse = term(value.terms_.begin()->second, std::move(m));
    }
    return *inverse;
  };
  Poly r;
  for (const auto& [m, c] : terms_) {
    auto it = m.find(name);
    if (it == m.end()) {
      r.add_term(m, c);
      continue;
    }
    int e = it->second;
    Monomial rest = m;
    rest.erase(name);
    Poly factor = e > 0 ? value.pow(static_cast<unsigned>(e)) : inverse_of_value().pow(static_cast<unsigned>(-e));
    r += term(c, std::move(rest)) * factor;
  }
  return r;
}

BigInt Poly::evaluate(const std::map<std::string, BigInt>& values) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [v, e] : m) {
      auto it = values.find(v);
      if (it == values.end()) throw std::invalid_argument("no value for variable " + v);
      BigInt pw = boost::multiprecision::pow(it->second, static_cast<unsigned>(e > 0 ? e : -e));
      if (e > 0) t *= pw;
      else {
        if (pw == 0) throw std::invalid_argument("division by zero evaluating " + v);
        t /= pw;
      }
    }
    total += t;
  }
  if (denominator(total) != 1) throw std::invalid_argument("polynomial value is not an integer");
  return numerator(total);
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    BigInt mag = abs(c);
    if (first) out << (c < 0 ? "-" : "");
    else out << (c < 0 ? " - " : " + ");
    first = false;
    bool any = false;
    if (m.empty() || mag != 1) {
      out << mag;
      any = true;
    }
    for (const auto& [v, e] : m) {
      out << (any ? "*" : "") << v;
      if (e != 1) out << '^' << e;
      any = true;
    }
  }
  return out.str();
}

Poly resultant(const Poly& a, const Poly& b, const std::string& name) {
  for (const auto* f : {&a, &b})
    for (const auto& [m, c] : f->terms())
      if (auto it = m.find(name); it != m.end() && it->second < 0)
        throw std::invalid_argument("resultant needs nonnegative powers of " + name);
  const int da = a.degree(name), db = b.degree(name);
  const int n = da + db;
  if (n == 0) return Poly(1);
  std::vector<std::vector<Poly>> s(n, std::vector<Poly>(n));
  for (int r = 0; r < db; ++r)
    for (int k = 0; k <= da; ++k) s[r][r + da - k] = a.coefficient_of(name, k);
  for (int r = 0; r < da; ++r)
    for (int k = 0; k <= db; ++k) s[db + r][r + db - k] = b.coefficient_of(name, k);
  return determinant(std::move(s));
}

}  // namespace gsp4
