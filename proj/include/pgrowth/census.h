#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "pgrowth/portrait_store.h"
#include "pgrowth/quotient.h"

namespace pgrowth {

enum class CensusStrategy {
  /// Breadth-first search of the Cayley graph from the identity.
  BreadthFirst,
  /// Repeatedly multiply every pair of found elements, keeping products of
  /// depth <= n + slack, until nothing new appears. Reaches elements whose
  /// shortest words pass through very deep intermediate elements.
  ProductClosure,
};

struct CensusOptions {
  int n = 0;
  CensusStrategy strategy = CensusStrategy::BreadthFirst;
  /// Breadth-first: maximum word radius. Product closure: maximum rounds.
  int radius_cap = 64;
  /// Breadth-first only: stop after this many consecutive radii add no
  /// element of depth <= n.
  int patience = 3;
  /// When set, elements deeper than n + slack are neither stored nor
  /// expanded. Unset means no pruning for breadth-first search and slack 0
  /// for product closure.
  std::optional<int> expand_slack;
  /// Breadth-first only: edges multiply by every element of nucleus word
  /// length <= step_length. 1 is the plain nucleus alphabet.
  int step_length = 1;
  std::size_t node_budget = PortraitStore::kDefaultNodeBudget;
  /// Maximum number of distinct elements stored; exceeding it throws
  /// MemoryBudgetExceeded.
  std::size_t element_budget = 5'000'000;
};

struct DepthCensus {
  std::string group;
  int n = 0;
  std::vector<mpz_class> totals;                                 // a_0..a_n
  std::optional<std::vector<std::vector<mpz_class>>> per_coset;  // [coset][depth], cumulative
  int final_radius = 0;
  int patience_used = 0;
  bool saturated = false;
  std::size_t elements_visited = 0;
};

/// Counts distinct elements by portrait depth, deduplicated by canonical
/// portrait. Completeness is heuristic: a breadth-first search stops once
/// `patience` radii in a row add nothing of depth <= n or the frontier
/// empties; product closure stops at a fixed point. Hitting the cap leaves
/// saturated = false. With a classifier the counts are also split by coset.
DepthCensus census(const GroupSpec& spec, const CensusOptions& options, const CosetClassifier* classifier = nullptr);

struct OracleCensus {
  DepthCensus census;
  int slack = 0;
};

constexpr std::size_t kOracleElementBudget = 100'000;

/// Product-closure census with slack 1, falling back to slack 0 when slack 1
/// exceeds the element budget. Slack 1 reaches elements whose shortest
/// products pass through depth n + 1.
OracleCensus oracle_census(const GroupSpec& spec, int n, const CosetClassifier* classifier = nullptr,
                           std::size_t element_budget = kOracleElementBudget);

}  // namespace pgrowth
