#include "pgrowth/growth_series.h"

namespace pgrowth {

std::string_view to_string(Provenance provenance) {
  switch (provenance) {
    case Provenance::Generic:
      return "generic";
    case Provenance::Specialized:
      return "specialized";
    case Provenance::ClosedForm:
      return "closed-form";
  }
  return "unknown";
}

bool GrowthSeries::sums_consistent() const {
  if (per_coset.empty()) return true;
  for (std::size_t n = 0; n < totals.size(); ++n) {
    mpz_class sum = 0;
    for (const auto& row : per_coset) {
      if (row.size() != totals.size()) return false;
      sum += row[n];
    }
    if (sum != totals[n]) return false;
  }
  return true;
}

}  // namespace pgrowth
