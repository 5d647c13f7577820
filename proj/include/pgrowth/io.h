#pragma once

#include <json.hpp>

#include <string>

#include "pgrowth/asymptotics.h"
#include "pgrowth/branch.h"
#include "pgrowth/catalog.h"
#include "pgrowth/census.h"
#include "pgrowth/growth_series.h"
#include "pgrowth/quotient.h"

namespace pgrowth {

using Json = nlohmann::ordered_json;

/// Parses JSON text, mapping syntax errors to ParseError.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

/// {"name", "degree", "generators": [{"symbol", "perm", "sections"}], "nucleus"}
Json to_json(const GroupSpec& spec);
GroupSpec group_spec_from_json(const Json& json);

Json to_json(const BranchData& data);
BranchData branch_data_from_json(const Json& json);

/// Level, seed words, element count and ambient index.
Json to_json(const GroupSpec& spec, const QuotientTable& table);
/// Recomputes the table from its seeds and checks the recorded counts.
QuotientTable quotient_table_from_json(const GroupSpec& spec, const Json& json);

/// Full per-coset integers as decimal strings.
Json to_json(const GrowthSeries& series);
GrowthSeries growth_series_from_json(const Json& json);

constexpr std::size_t kCsvDigitThreshold = 10'000;

/// Columns n, a_n, digits. a_n is left empty beyond the digit threshold.
std::string growth_series_csv(const GrowthSeries& series, std::size_t digit_threshold = kCsvDigitThreshold);

/// Constants as decimal strings with their enclosing intervals.
Json to_json(const GammaCertificate& certificate, int digits = 30);
/// Columns n, gamma_n, error_bound.
std::string certificate_csv(const GammaCertificate& certificate, int digits = 20);

Json to_json(const DepthCensus& census, const std::vector<std::string>& coset_labels = {});
/// Columns n, a_n, one column per coset when present, saturated.
std::string census_csv(const DepthCensus& census, const std::vector<std::string>& coset_labels = {});

Json to_json(const GroupSpec& spec, const NucleusReport& report);

}  // namespace pgrowth
