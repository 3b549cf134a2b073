#include "gsp4/bigint.hpp"

#include <cctype>
#include <stdexcept>

namespace gsp4 {

BigInt parse_decimal(const std::string& text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw std::invalid_argument("malformed integer '" + text + "'");
  BigInt n = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("malformed integer '" + text + "'");
    n = n * 10 + (text[i] - '0');
  }
  return negative ? BigInt(-n) : n;
}

BigInt mod_floor(const BigInt& n, const BigInt& m) {
  BigInt r = n % m;
  if (r < 0) r += m;
  return r;
}

int valuation(BigInt n, const BigInt& prime) {
  if (n == 0) throw std::domain_error("valuation of zero");
  int v = 0;
  while (n % prime == 0) {
    n /= prime;
    ++v;
  }
  return v;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace gsp4
