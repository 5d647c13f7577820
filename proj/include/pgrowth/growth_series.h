#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace pgrowth {

enum class Provenance { Generic, Specialized, ClosedForm };

std::string_view to_string(Provenance provenance);

/// Portrait growth a_0..a_N with per-coset counts p_n(t_i).
struct GrowthSeries {
  std::string group;
  Provenance provenance = Provenance::Generic;
  std::vector<std::string> coset_labels;
  std::vector<std::vector<mpz_class>> per_coset;  // [coset][n]
  std::vector<mpz_class> totals;                  // [n]

  int max_depth() const { return static_cast<int>(totals.size()) - 1; }
  /// True when every total equals the sum of its column.
  bool sums_consistent() const;
};

}  // namespace pgrowth
