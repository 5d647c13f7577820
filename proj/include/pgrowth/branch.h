#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pgrowth/growth_series.h"
#include "pgrowth/permutation.h"
#include "pgrowth/quotient.h"

namespace pgrowth {

/// Decomposition of t_i s_j: the cosets of its d sections and its root
/// permutation.
struct BranchEntry {
  std::vector<std::size_t> cosets;
  Permutation perm;

  friend bool operator==(const BranchEntry&, const BranchEntry&) = default;
};

/// Everything the portrait recursion needs for a regular branch group.
struct BranchData {
  std::string group;
  std::size_t degree = 2;
  std::vector<std::string> transversal;          // T, left transversal of K in G
  std::vector<std::string> section_transversal;  // S, left transversal of psi^-1(K x ... x K) in K
  std::vector<std::vector<BranchEntry>> table;   // [i][j] for t_i s_j
  std::vector<std::uint64_t> p0;

  std::size_t k() const { return transversal.size(); }
  std::size_t l() const { return section_transversal.size(); }
  /// Throws InvalidSpec on shape or range errors.
  void validate() const;
};

/// Index of psi^-1(K x ... x K) in K, computed one level below the table.
std::size_t section_subgroup_index(const GroupSpec& spec, const QuotientTable& table,
                                   std::size_t size_budget = kDefaultQuotientBudget);

/// Builds the decomposition table from transversals T and S and the image of
/// K. Requires |T| = |G : K| and |S| = |K : psi^-1(K^d)|, S inside K, and S
/// hitting distinct cosets. Throws AmbiguousTransversal, NoCoset or
/// InvalidArgument.
BranchData build_branch_data(const GroupSpec& spec, const std::vector<Word>& transversal,
                             const std::vector<Word>& section_transversal, const QuotientTable& table);

/// Iterates p_{n+1}(t_i) = sum_j prod_r p_n(t_{ijr}) from p0, exactly.
GrowthSeries iterate_growth(const BranchData& data, int max_depth);

}  // namespace pgrowth
