#pragma once

#include <array>
#include <compare>
#include <set>
#include <string>

namespace gsp4 {

/// Cocharacter of the diagonal torus of GSp4, equivalently a weight of the
/// dual torus: a 4-tuple with a1 + a4 = a2 + a3.
class Weight {
 public:
  Weight() = default;
  /// Throws std::invalid_argument when the similitude constraint fails.
  Weight(int a1, int a2, int a3, int a4);
  explicit Weight(const std::array<int, 4>& a) : Weight(a[0], a[1], a[2], a[3]) {}

  const std::array<int, 4>& entries() const { return a_; }
  int operator[](std::size_t i) const { return a_[i]; }
  int similitude() const { return a_[0] + a_[3]; }
  bool is_dominant() const { return a_[0] >= a_[1] && a_[1] >= a_[2]; }

  /// 2<nu, rho> = 4 a1 + 2 a2 - 3c, with rho the half sum of positive roots of GSp4.
  int two_rho_pairing() const { return 4 * a_[0] + 2 * a_[1] - 3 * similitude(); }

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight scaled(int k) const;

  std::string to_string() const;  // "(2,1,1,0)"
  static Weight parse(const std::string& text);

  friend auto operator<=>(const Weight&, const Weight&) = default;

 private:
  std::array<int, 4> a_{0, 0, 0, 0};
};

/// A dominant coweight a1 >= a2 >= a3 >= a4; indexes double cosets K mu(p) K.
class DominantCoweight {
 public:
  DominantCoweight() = default;
  /// Throws std::invalid_argument unless the weight is dominant.
  explicit DominantCoweight(const Weight& w);
  DominantCoweight(int a1, int a2, int a3, int a4) : DominantCoweight(Weight(a1, a2, a3, a4)) {}

  const Weight& weight() const { return w_; }
  int operator[](std::size_t i) const { return w_[i]; }
  int similitude() const { return w_.similitude(); }
  int two_rho_pairing() const { return w_.two_rho_pairing(); }
  /// a1 - a4, the spread that bounds lattice enumeration.
  int spread() const { return w_[0] - w_[3]; }
  std::string to_string() const { return w_.to_string(); }
  static DominantCoweight parse(const std::string& text) { return DominantCoweight(Weight::parse(text)); }

  friend auto operator<=>(const DominantCoweight&, const DominantCoweight&) = default;

 private:
  Weight w_;
};

namespace coweights {
inline const DominantCoweight nu0{1, 1, 1, 1};
inline const DominantCoweight nu2{1, 1, 0, 0};
inline const DominantCoweight nu1{2, 1, 1, 0};
inline const DominantCoweight two_nu2{2, 2, 0, 0};
inline DominantCoweight central(int k) { return DominantCoweight{k, k, k, k}; }
}  // namespace coweights

/// Weyl group generators of GSp4 acting on weights.
Weight reflect_s1(const Weight& w);  // (a2,a1,a4,a3)
Weight reflect_s2(const Weight& w);  // (a1,a3,a2,a4)
Weight reflect_s3(const Weight& w);  // (a4,a2,a3,a1)

/// Closure of {w} under s1, s2, s3.
std::set<Weight> weyl_orbit(const Weight& w);

/// The dominant representative of the Weyl orbit of w.
DominantCoweight dominant_conjugate(const Weight& w);

/// xi <= nu in the dominance order: nu - xi is a nonnegative integer
/// combination of the simple coroots (1,-1,1,-1) and (0,1,-1,0).
bool dominance_leq(const DominantCoweight& xi, const DominantCoweight& nu);

/// All dominant xi with xi <= nu.
std::set<DominantCoweight> dominant_weights_below(const DominantCoweight& nu);

}  // namespace gsp4
