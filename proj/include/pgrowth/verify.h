#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pgrowth/branch.h"
#include "pgrowth/catalog.h"
#include "pgrowth/growth_series.h"

namespace pgrowth {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
  /// Not run, e.g. because it would exceed a budget; does not count as a pass.
  bool skipped = false;
};

struct VerifyOptions {
  /// Census depth; negative selects the group default, 0 skips beyond a_0.
  int oracle_depth = -1;
  /// Only check the published decomposition tables.
  bool tables_only = false;
  int series_depth = 12;
  int identity_depth = 20;
};

/// No check failed; skipped checks are ignored.
bool all_passed(const std::vector<Check>& checks);

/// a_{n+1} <= bound * a_n^d for every n of the series.
Check stabilizer_bound_check(const GrowthSeries& series, std::size_t bound, unsigned d);

std::vector<Check> verify_grigorchuk(const VerifyOptions& options);
/// Throws NonSymmetricRequired for symmetric vectors.
std::vector<Check> verify_ggs(const GgsVector& vector, const VerifyOptions& options);
std::vector<Check> verify_apollonian(const VerifyOptions& options);
/// Nucleus validation, and with branch data the recursion against a census.
std::vector<Check> verify_user(const GroupSpec& spec, const std::optional<BranchData>& data,
                               const VerifyOptions& options);

}  // namespace pgrowth
