#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>

#include "gsp4/bigint.hpp"
#include "gsp4/weight.hpp"

namespace gsp4 {

/// 4x4 matrices, entry [i][j] is coordinate i of basis vector j.
using RatMatrix = std::array<std::array<Rational, 4>, 4>;
using IntMatrix = std::array<std::array<std::int64_t, 4>, 4>;

RatMatrix identity_matrix();
RatMatrix diagonal_matrix(int p, const std::array<int, 4>& exponents);
RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);
RatMatrix transpose(const RatMatrix& a);
Rational determinant(const RatMatrix& a);
/// Throws std::invalid_argument on a singular matrix.
RatMatrix inverse(const RatMatrix& a);

/// The standard symplectic form J(e1,e4) = J(e2,e3) = 1 on Q_p^4.
const RatMatrix& symplectic_form();

/// A Z_p-lattice p^{-s} H Z_p^4 in Q_p^4. H is in canonical Hermite form:
/// upper triangular by columns, diagonal p^{k_i}, entries of row i to the right
/// of the diagonal in [0, p^{k_i}), and s minimal (H not divisible by p).
class PadicLattice {
 public:
  static PadicLattice standard(int p);

  int prime() const { return p_; }
  int shift() const { return s_; }
  const IntMatrix& hermite() const { return h_; }
  /// k_i, the p-valuations of the Hermite diagonal.
  const std::array<int, 4>& diagonal_exponents() const { return k_; }

  /// Column basis p^{-s} H.
  RatMatrix basis() const;
  /// p^e L.
  PadicLattice scaled(int e) const;
  bool contains(const PadicLattice& other) const;
  /// log_p [outer : this]; throws std::invalid_argument unless contained.
  int colength_in(const PadicLattice& outer) const;
  /// v_p of the covolume, sum(k_i) - 4s.
  int volume_exponent() const;

  std::string to_string() const;

  friend bool operator==(const PadicLattice&, const PadicLattice&) = default;
  friend auto operator<=>(const PadicLattice& a, const PadicLattice& b) {
    return std::tie(a.p_, a.s_, a.h_) <=> std::tie(b.p_, b.s_, b.h_);
  }

 private:
  friend PadicLattice make_lattice(int p, int shift, const IntMatrix& h);
  int p_ = 2;
  int s_ = 0;
  IntMatrix h_{};
  std::array<int, 4> k_{};
};

/// Builds a lattice from an H already in reduced Hermite form (validated).
PadicLattice make_lattice(int p, int shift, const IntMatrix& h);

/// Canonical form of the lattice spanned by the columns of basis. Entries may
/// be any rationals; denominators prime to p are units. Throws
/// std::invalid_argument on a singular basis or a non-prime p.
PadicLattice canonicalize(const RatMatrix& basis, int p);

/// {x : J(x, L) in Z_p}.
PadicLattice dual_lattice(const PadicLattice& lattice);

struct GspClass {
  /// c with L^dual = p^{-c} L, when it exists.
  std::optional<int> scaling_exponent;
  friend bool operator==(const GspClass&, const GspClass&) = default;
};

enum class VertexType { type0, type1, type2, none };
std::string to_string(VertexType t);

struct Classification {
  GspClass gsp;
  VertexType vertex = VertexType::none;
};

Classification classify(const PadicLattice& lattice);

/// Elementary divisor valuations of the change of basis from L1 to L2,
/// sorted descending. Throws std::domain_error when they violate the
/// similitude constraint.
DominantCoweight relative_position(const PadicLattice& l1, const PadicLattice& l2);

/// Elementary divisor valuations of an invertible rational matrix, descending.
std::array<int, 4> elementary_divisors(const RatMatrix& m, int p);

/// (k_i - s): the torus coordinate of L against the standard flag.
Weight iwasawa_invariant(const PadicLattice& lattice);

/// g with g Z_p^4 = L and g^T J g = p^c J, for L self-dual up to scaling.
/// Throws std::invalid_argument otherwise.
RatMatrix symplectic_frame(const PadicLattice& lattice);

/// g L.
PadicLattice transform(const RatMatrix& g, const PadicLattice& lattice);

/// A + B and A n B.
PadicLattice lattice_sum(const PadicLattice& a, const PadicLattice& b);
PadicLattice lattice_intersection(const PadicLattice& a, const PadicLattice& b);

/// mu(p) Z_p^4 for a weight mu.
PadicLattice torus_lattice(int p, const Weight& mu);

}  // namespace gsp4
