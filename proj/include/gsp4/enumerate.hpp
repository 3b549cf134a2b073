#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "gsp4/lattice.hpp"

namespace gsp4 {

/// Default bound on a1 - a4 for enumerated coweights: lattices stay between
/// p^2 L and p^-2 L around the basepoint.
inline constexpr int kDefaultWindow = 4;

class WindowError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Every lattice L' self-dual up to scaling with relative_position(L, L') = mu,
/// in a deterministic order. L must be self-dual up to scaling.
/// Throws WindowError when mu.spread() exceeds window.
std::vector<PadicLattice> enumerate_at_position(const PadicLattice& lattice, const DominantCoweight& mu,
                                                int window = kDefaultWindow);

/// Number of lattices in K mu(p) K / K.
std::size_t coset_count(int p, const DominantCoweight& mu, int window = kDefaultWindow);

/// Every lattice M with inner <= M <= outer, optionally only those of the
/// given colength in outer. Throws std::invalid_argument unless inner <= outer.
std::vector<PadicLattice> enumerate_between(const PadicLattice& outer, const PadicLattice& inner,
                                            std::optional<int> colength = std::nullopt);

}  // namespace gsp4
