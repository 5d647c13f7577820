#pragma once

#include <random>
#include <string>
#include <vector>

#include "pgrowth/branch.h"
#include "pgrowth/branch_tables.h"
#include "pgrowth/group_spec.h"
#include "pgrowth/quotient.h"

namespace pgrowth::testing {

inline Word random_word(const GroupSpec& spec, std::mt19937_64& rng, std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> length(0, max_length);
  std::uniform_int_distribution<std::uint16_t> generator(0, static_cast<std::uint16_t>(spec.generators().size() - 1));
  std::bernoulli_distribution inverse(0.5);
  Word word;
  for (std::size_t i = length(rng); i > 0; --i) word.push_back({generator(rng), inverse(rng)});
  return word;
}

inline std::vector<std::string> formatted(const GroupSpec& spec, const std::vector<Word>& words) {
  std::vector<std::string> out;
  for (const Word& w : words) out.push_back(spec.format(w));
  return out;
}

inline BranchData branch_data_for(const GroupSpec& spec, const BranchSetup& setup) {
  const QuotientTable table = normal_closure_image(spec, spec.parse_all(setup.seeds), setup.level);
  return build_branch_data(spec, spec.parse_all(setup.transversal), spec.parse_all(setup.section_transversal),
                           table);
}

}  // namespace pgrowth::testing
