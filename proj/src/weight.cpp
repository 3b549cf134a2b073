#include "gsp4/weight.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace gsp4 {

Weight::Weight(int a1, int a2, int a3, int a4) : a_{a1, a2, a3, a4} {
  if (a1 + a4 != a2 + a3)
    throw std::invalid_argument("weight " + to_string() + " violates a1 + a4 = a2 + a3");
}

Weight Weight::operator+(const Weight& o) const {
  return Weight(a_[0] + o.a_[0], a_[1] + o.a_[1], a_[2] + o.a_[2], a_[3] + o.a_[3]);
}

Weight Weight::operator-(const Weight& o) const {
  return Weight(a_[0] - o.a_[0], a_[1] - o.a_[1], a_[2] - o.a_[2], a_[3] - o.a_[3]);
}

Weight Weight::scaled(int k) const { return Weight(k * a_[0], k * a_[1], k * a_[2], k * a_[3]); }

std::string Weight::to_string() const {
  std::ostringstream out;
  out << "(" << a_[0] << "," << a_[1] << "," << a_[2] << "," << a_[3] << ")";
  return out.str();
}

Weight Weight::parse(const std::string& text) {
  std::array<int, 4> a{};
  std::string body;
  for (char ch : text)
    if (ch != ' ' && ch != '(' && ch != ')') body += ch;
  std::istringstream in(body);
  std::string item;
  std::size_t n = 0;
  while (std::getline(in, item, ',')) {
    if (n == 4) throw std::invalid_argument("coweight '" + text + "' has more than four entries");
    std::size_t used = 0;
    try {
      a[n] = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw std::invalid_argument("malformed coweight '" + text + "'");
    ++n;
  }
  if (n != 4) throw std::invalid_argument("coweight '" + text + "' must have four entries");
  return Weight(a);
}

DominantCoweight::DominantCoweight(const Weight& w) : w_(w) {
  if (!w.is_dominant()) throw std::invalid_argument("coweight " + w.to_string() + " is not dominant");
}

Weight reflect_s1(const Weight& w) { return Weight(w[1], w[0], w[3], w[2]); }
Weight reflect_s2(const Weight& w) { return Weight(w[0], w[2], w[1], w[3]); }
Weight reflect_s3(const Weight& w) { return Weight(w[3], w[1], w[2], w[0]); }

std::set<Weight> weyl_orbit(const Weight& w) {
  std::set<Weight> orbit{w};
  std::vector<Weight> frontier{w};
  while (!frontier.empty()) {
    Weight x = frontier.back();
    frontier.pop_back();
    for (const Weight& y : {reflect_s1(x), reflect_s2(x), reflect_s3(x)})
      if (orbit.insert(y).second) frontier.push_back(y);
  }
  return orbit;
}

DominantCoweight dominant_conjugate(const Weight& w) {
  for (const Weight& x : weyl_orbit(w))
    if (x.is_dominant()) return DominantCoweight(x);
  throw std::logic_error("Weyl orbit without dominant member");
}

bool dominance_leq(const DominantCoweight& xi, const DominantCoweight& nu) {
  if (xi.similitude() != nu.similitude()) return false;
  // nu - xi = x (1,-1,1,-1) + y (0,1,-1,0) = (x, y - x, x - y, -x)
  int x = nu[0] - xi[0];
  int y = x + (nu[1] - xi[1]);
  return x >= 0 && y >= 0;
}

std::set<DominantCoweight> dominant_weights_below(const DominantCoweight& nu) {
  std::set<DominantCoweight> out;
  // each simple coroot lowers 2<.,rho> by 2, and dominant weights have 2<.,rho> >= 0
  int bound = nu.two_rho_pairing() / 2;
  for (int x = 0; x <= bound; ++x)
    for (int y = 0; x + y <= bound; ++y) {
      Weight xi(nu[0] - x, nu[1] + x - y, nu[2] - x + y, nu[3] + x);
      if (xi.is_dominant()) out.insert(DominantCoweight(xi));
    }
  return out;
}

}  // namespace gsp4
