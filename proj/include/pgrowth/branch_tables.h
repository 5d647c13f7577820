#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace pgrowth {

/// Branching subgroup K given as the normal closure of seed words, together
/// with the quotient level used to decide membership and published
/// transversals.
struct BranchSetup {
  std::vector<std::string> seeds;
  int level = 1;
  std::size_t expected_index = 1;
  std::vector<std::string> transversal;
  std::vector<std::string> section_transversal;  // empty when not published
};

/// A published decomposition t s = (g_1, ..., g_d) alpha.
struct DecompositionRow {
  std::string word;
  std::vector<std::string> sections;
  std::string perm;   // cycle notation, "()" for the identity
  std::string coset;  // transversal representative of the word, if stated
};

/// K = <[a,b]>^G of index 16 with T (16 words) and S (4 words).
BranchSetup grigorchuk_branch_setup();
/// The 24 decompositions t s for t in {1, c, dada, b, d, cada}, sections
/// written modulo K.
std::vector<DecompositionRow> grigorchuk_decompositions();

/// G' of index p^2 with T = {a^i b^j}. No S is published.
BranchSetup ggs_branch_setup(int p);

/// E, the even-length words, of index 2 with T = {1, x} and the 12-word S.
BranchSetup apollonian_branch_setup();
/// The 24 rows t s for t in {1, x}, s in S.
std::vector<DecompositionRow> apollonian_decompositions();

}  // namespace pgrowth
