#include "gsp4/chains.hpp"

#include <stdexcept>

#include "gsp4/enumerate.hpp"

namespace gsp4 {

namespace {

const std::map<std::string_view, ChainPattern>& pattern_names() {
  static const std::map<std::string_view, ChainPattern> names{
      {"kl-index", ChainPattern::kl_index},
      {"sie-index", ChainPattern::sie_index},
      {"type1-under-type0", ChainPattern::type1_under_type0},
      {"type2-under-type1", ChainPattern::type2_under_type1},
      {"lines-in-2-space", ChainPattern::lines_in_2_space},
      {"type2-between-type0-pairs", ChainPattern::type2_between_type0_pairs},
  };
  return names;
}

bool is_type(const PadicLattice& l, VertexType t) { return classify(l).vertex == t; }

std::size_t count_of_type(const std::vector<PadicLattice>& ls, VertexType t) {
  std::size_t n = 0;
  for (const auto& l : ls)
    if (is_type(l, t)) ++n;
  return n;
}

}  // namespace

ChainPattern parse_chain_pattern(std::string_view name) {
  auto it = pattern_names().find(name);
  if (it == pattern_names().end()) throw std::invalid_argument("unknown chain pattern '" + std::string(name) + "'");
  return it->second;
}

std::string to_string(ChainPattern pattern) {
  for (const auto& [name, value] : pattern_names())
    if (value == pattern) return std::string(name);
  return "?";
}

std::map<int, PairCase> tally_type0_pairs(int p) {
  const PadicLattice l0 = PadicLattice::standard(p);
  std::map<PadicLattice, std::size_t> per_partner;
  for (const auto& l2 : enumerate_between(l0, l0.scaled(1), 2)) {
    if (!is_type(l2, VertexType::type2)) continue;
    for (const auto& l0b : enumerate_between(dual_lattice(l2), l2, 2)) {
      auto cls = classify(l0b);
      if (cls.vertex == VertexType::type0 && cls.gsp.scaling_exponent == 0) ++per_partner[l0b];
    }
  }
  std::map<int, PairCase> cases;
  for (const auto& [l0b, n] : per_partner) {
    PadicLattice meet = lattice_intersection(l0, l0b);
    PadicLattice floor = lattice_sum(dual_lattice(l0), dual_lattice(l0b)).scaled(1);
    int d = floor.colength_in(meet);
    DominantCoweight pos = relative_position(l0, l0b);
    auto [it, fresh] = cases.try_emplace(d, PairCase{pos, 0, n});
    if (!fresh && (it->second.position != pos || it->second.multiplicity != n))
      throw std::logic_error("intersection dimension " + std::to_string(d) +
                             " does not determine the relative position and multiplicity");
    ++it->second.partners;
  }
  return cases;
}

std::size_t count_chain_pattern(ChainPattern pattern, int p, std::optional<int> intersection_dim) {
  if (!is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
  if (pattern != ChainPattern::type2_between_type0_pairs && intersection_dim)
    throw std::invalid_argument("intersection dimension only applies to type2-between-type0-pairs");
  const PadicLattice l0 = PadicLattice::standard(p);
  switch (pattern) {
    case ChainPattern::kl_index: {
      // Each type-1 Lambda_Pa <1 Lambda0 is determined by the line
      // p Lambda_Pa^dual / p Lambda0 in Lambda0 / p Lambda0.
      std::size_t n = 0;
      for (const auto& line : enumerate_between(l0, l0.scaled(1), 3)) {
        PadicLattice pa = dual_lattice(line.scaled(-1));
        if (is_type(pa, VertexType::type1) && pa.colength_in(l0) == 1) ++n;
      }
      return n;
    }
    case ChainPattern::type1_under_type0:
      return count_of_type(enumerate_between(l0, l0.scaled(1), 1), VertexType::type1);
    case ChainPattern::sie_index:
      return count_of_type(enumerate_between(l0, l0.scaled(1), 2), VertexType::type2);
    case ChainPattern::type2_under_type1: {
      // span(p e1, e2, e3, e4) has colength 2 in its dual
      PadicLattice pa = canonicalize(diagonal_matrix(p, {1, 0, 0, 0}), p);
      return count_of_type(enumerate_between(pa, pa.scaled(1), 1), VertexType::type2);
    }
    case ChainPattern::lines_in_2_space: {
      PadicLattice l2 = torus_lattice(p, coweights::nu2.weight());
      return count_of_type(enumerate_between(l0, l2, 1), VertexType::type1);
    }
    case ChainPattern::type2_between_type0_pairs: {
      if (!intersection_dim) throw std::invalid_argument("type2-between-type0-pairs needs an intersection dimension");
      int d = *intersection_dim;
      if (d != 0 && d != 2 && d != 4) throw std::invalid_argument("intersection dimension must be 0, 2 or 4");
      auto cases = tally_type0_pairs(p);
      auto it = cases.find(d);
      return it == cases.end() ? 0 : it->second.multiplicity;
    }
  }
  throw std::invalid_argument("unknown chain pattern");
}

std::size_t count_chain_pattern(std::string_view pattern, int p, std::optional<int> intersection_dim) {
  return count_chain_pattern(parse_chain_pattern(pattern), p, intersection_dim);
}

}  // namespace gsp4
