#include "gsp4/scalar.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "gsp4/checked.hpp"

namespace gsp4 {

using detail::checked_add;
using detail::checked_mul;

Scalar::Scalar(std::int64_t constant) { add_term(0, constant); }

Scalar Scalar::monomial(std::int64_t coefficient, int exponent) {
  Scalar s;
  s.add_term(exponent, coefficient);
  return s;
}

void Scalar::add_term(int exponent, std::int64_t coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second = checked_add(it->second, coefficient);
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t Scalar::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

bool Scalar::is_nonnegative() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

bool Scalar::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

int Scalar::max_exponent() const { return terms_.rbegin()->first; }
int Scalar::min_exponent() const { return terms_.begin()->first; }

Scalar Scalar::operator-() const {
  Scalar r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, checked_mul(c, -1));
  return r;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, checked_mul(c, -1));
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  Scalar r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : other.terms_) r.add_term(e1 + e2, checked_mul(c1, c2));
  *this = std::move(r);
  return *this;
}

Scalar Scalar::shifted(int shift) const {
  Scalar r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + shift, c);
  return r;
}

std::string Scalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [e, c] = *it;
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag;
    out << "q";
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

Scalar Scalar::parse(const std::string& text) {
  std::string s;
  char prev = '\0';
  bool gap = false;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) {
      gap = true;
      continue;
    }
    if (gap && (std::isalnum(static_cast<unsigned char>(prev)) || prev == '^') &&
        (std::isalnum(static_cast<unsigned char>(ch)) || ch == '^'))
      throw std::invalid_argument("malformed scalar: '" + text + "'");
    gap = false;
    prev = ch;
    s += ch;
  }
  if (s.empty()) throw std::invalid_argument("empty scalar");
  if (s == "0") return Scalar{};

  Scalar result;
  std::size_t i = 0;
  auto fail = [&]() { throw std::invalid_argument("malformed scalar: '" + text + "'"); };
  auto read_int = [&](std::int64_t& value) {
    std::size_t start = i;
    std::int64_t v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = checked_add(checked_mul(v, 10), s[i] - '0');
      ++i;
    }
    if (i > start) value = v;
    return i > start;
  };
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      fail();
    }
    first = false;
    std::int64_t coef = 1;
    bool has_coef = read_int(coef);
    int exponent = 0;
    if (i < s.size() && s[i] == 'q') {
      ++i;
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        int esign = 1;
        if (i < s.size() && s[i] == '-') {
          esign = -1;
          ++i;
        }
        std::int64_t e = 0;
        if (!read_int(e)) fail();
        exponent = static_cast<int>(esign * e);
      }
    } else if (!has_coef) {
      fail();
    }
    result.add_term(exponent, sign * coef);
  }
  return result;
}

}  // namespace gsp4
