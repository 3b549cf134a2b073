#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "gsp4/lattice.hpp"

namespace gsp4 {

enum class ChainPattern {
  kl_index,
  sie_index,
  type1_under_type0,
  type2_under_type1,
  lines_in_2_space,
  type2_between_type0_pairs,
};

/// Accepts the hyphenated names, e.g. "kl-index"; throws std::invalid_argument.
ChainPattern parse_chain_pattern(std::string_view name);
std::string to_string(ChainPattern pattern);

/// Pairs (Lambda2, Lambda0') with p Lambda0 <2 Lambda2 <2 Lambda0 and
/// Lambda2 <2 Lambda0' self-dual, grouped by the dimension d of
/// (Lambda0 n Lambda0') / (p Lambda0 + p Lambda0').
struct PairCase {
  DominantCoweight position;  // pos(Lambda0, Lambda0')
  std::size_t partners = 0;   // number of Lambda0' in this case
  std::size_t multiplicity = 0;  // number of Lambda2 per Lambda0'
};
std::map<int, PairCase> tally_type0_pairs(int p);

/// Exact count for a chain pattern at p. The between-pairs pattern needs the
/// intersection dimension (0, 2 or 4) and returns the number of Lambda2.
std::size_t count_chain_pattern(ChainPattern pattern, int p, std::optional<int> intersection_dim = std::nullopt);
std::size_t count_chain_pattern(std::string_view pattern, int p, std::optional<int> intersection_dim = std::nullopt);

}  // namespace gsp4
