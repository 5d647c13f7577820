#include "pgrowth/io.h"

#include <fstream>
#include <sstream>

#include "pgrowth/error.h"

namespace pgrowth {

namespace {

template <typename T>
T field(const Json& json, const char* key) {
  if (!json.is_object() || !json.contains(key))
    throw Error(ErrorKind::ParseError, std::string("missing field \"") + key + "\"");
  try {
    return json.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("field \"") + key + "\": " + e.what());
  }
}

mpz_class parse_integer(const std::string& text) {
  mpz_class value;
  if (text.empty() || value.set_str(text, 10) != 0)
    throw Error(ErrorKind::ParseError, "not a decimal integer: " + text);
  return value;
}

Json interval_json(const Interval& interval, int digits) {
  return Json{{"lo", interval.lo.to_string(digits, MPFR_RNDD)}, {"hi", interval.hi.to_string(digits, MPFR_RNDU)}};
}

std::size_t digit_count(const mpz_class& value) {
  // mpz_sizeinbase may overshoot by one.
  std::size_t digits = mpz_sizeinbase(value.get_mpz_t(), 10);
  if (digits > 1) {
    mpz_class threshold;
    mpz_ui_pow_ui(threshold.get_mpz_t(), 10, digits - 1);
    if (abs(value) < threshold) --digits;
  }
  return digits;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

Json to_json(const GroupSpec& spec) {
  Json generators = Json::array();
  for (const Generator& g : spec.generators()) {
    Json sections = Json::array();
    for (const Word& w : g.sections) sections.push_back(spec.format(w));
    generators.push_back({{"symbol", g.symbol}, {"perm", g.perm.one_based()}, {"sections", sections}});
  }
  Json nucleus = Json::array();
  for (const Word& w : spec.nucleus()) nucleus.push_back(spec.format(w));
  return {{"name", spec.name()}, {"degree", spec.degree()}, {"generators", generators}, {"nucleus", nucleus}};
}

GroupSpec group_spec_from_json(const Json& json) {
  std::vector<GeneratorText> generators;
  for (const Json& g : field<Json>(json, "generators"))
    generators.push_back({field<std::string>(g, "symbol"), field<std::vector<int>>(g, "perm"),
                          field<std::vector<std::string>>(g, "sections")});
  return GroupSpec::from_text(field<std::string>(json, "name"), field<std::size_t>(json, "degree"), generators,
                              field<std::vector<std::string>>(json, "nucleus"));
}

Json to_json(const BranchData& data) {
  Json table = Json::array();
  for (const auto& row : data.table) {
    Json out_row = Json::array();
    for (const BranchEntry& entry : row) out_row.push_back({{"cosets", entry.cosets}, {"perm", entry.perm.one_based()}});
    table.push_back(out_row);
  }
  return {{"group", data.group},
          {"degree", data.degree},
          {"transversal", data.transversal},
          {"section_transversal", data.section_transversal},
          {"table", table},
          {"p0", data.p0}};
}

BranchData branch_data_from_json(const Json& json) {
  BranchData data;
  data.group = field<std::string>(json, "group");
  data.degree = field<std::size_t>(json, "degree");
  data.transversal = field<std::vector<std::string>>(json, "transversal");
  data.section_transversal = field<std::vector<std::string>>(json, "section_transversal");
  data.p0 = field<std::vector<std::uint64_t>>(json, "p0");
  for (const Json& row : field<Json>(json, "table")) {
    std::vector<BranchEntry> entries;
    for (const Json& entry : row) {
      const auto perm = field<std::vector<int>>(entry, "perm");
      if (perm.size() != data.degree) throw Error(ErrorKind::InvalidSpec, "branch table permutation has the wrong degree");
      entries.push_back({field<std::vector<std::size_t>>(entry, "cosets"), Permutation::from_one_based(perm)});
    }
    data.table.push_back(std::move(entries));
  }
  data.validate();
  return data;
}

Json to_json(const GroupSpec& spec, const QuotientTable& table) {
  Json seeds = Json::array();
  for (const Word& w : table.seeds) seeds.push_back(spec.format(w));
  return {{"group", spec.name()},
          {"level", table.level},
          {"seeds", seeds},
          {"elements", table.size()},
          {"ambient_order", table.ambient_order},
          {"ambient_index", table.ambient_index()}};
}

QuotientTable quotient_table_from_json(const GroupSpec& spec, const Json& json) {
  std::vector<Word> seeds;
  for (const auto& text : field<std::vector<std::string>>(json, "seeds")) seeds.push_back(spec.parse(text));
  QuotientTable table = normal_closure_image(spec, seeds, field<int>(json, "level"));
  if (table.size() != field<std::size_t>(json, "elements") ||
      table.ambient_index() != field<std::size_t>(json, "ambient_index"))
    throw Error(ErrorKind::InvalidSpec, "recomputed quotient table does not match the recorded counts");
  return table;
}

Json to_json(const GrowthSeries& series) {
  Json totals = Json::array();
  for (const auto& value : series.totals) totals.push_back(value.get_str());
  Json cosets = Json::array();
  for (std::size_t i = 0; i < series.per_coset.size(); ++i) {
    Json values = Json::array();
    for (const auto& value : series.per_coset[i]) values.push_back(value.get_str());
    cosets.push_back({{"label", i < series.coset_labels.size() ? series.coset_labels[i] : std::to_string(i)},
                      {"counts", values}});
  }
  return {{"group", series.group},
          {"provenance", std::string(to_string(series.provenance))},
          {"max_depth", series.max_depth()},
          {"totals", totals},
          {"per_coset", cosets}};
}

GrowthSeries growth_series_from_json(const Json& json) {
  GrowthSeries series;
  series.group = field<std::string>(json, "group");
  const auto provenance = field<std::string>(json, "provenance");
  if (provenance == "generic")
    series.provenance = Provenance::Generic;
  else if (provenance == "specialized")
    series.provenance = Provenance::Specialized;
  else if (provenance == "closed-form")
    series.provenance = Provenance::ClosedForm;
  else
    throw Error(ErrorKind::ParseError, "unknown provenance " + provenance);
  for (const auto& text : field<std::vector<std::string>>(json, "totals")) series.totals.push_back(parse_integer(text));
  for (const Json& coset : field<Json>(json, "per_coset")) {
    series.coset_labels.push_back(field<std::string>(coset, "label"));
    std::vector<mpz_class> counts;
    for (const auto& text : field<std::vector<std::string>>(coset, "counts")) counts.push_back(parse_integer(text));
    series.per_coset.push_back(std::move(counts));
  }
  if (!series.sums_consistent()) throw Error(ErrorKind::InvalidSpec, "per-coset counts do not sum to the totals");
  return series;
}

std::string growth_series_csv(const GrowthSeries& series, std::size_t digit_threshold) {
  std::ostringstream out;
  out << "n,a_n,digits\n";
  for (std::size_t n = 0; n < series.totals.size(); ++n) {
    const std::size_t digits = digit_count(series.totals[n]);
    out << n << ',' << (digits <= digit_threshold ? series.totals[n].get_str() : std::string()) << ',' << digits
        << '\n';
  }
  return out.str();
}

Json to_json(const GammaCertificate& certificate, int digits) {
  Json terms = Json::array();
  for (const GammaTerm& term : certificate.terms)
    terms.push_back({{"n", term.n},
                     {"gamma_n", interval_json(term.gamma_n, digits)},
                     {"error_bound", term.error.hi.to_string(digits, MPFR_RNDU)},
                     {"enclosure", interval_json(term.enclosure, digits)},
                     {"envelope_verified", term.envelope_verified}});
  return {{"d", certificate.d},
          {"A", certificate.a.get_str()},
          {"B", certificate.b.get_str()},
          {"empirical", certificate.empirical},
          {"precision_bits", certificate.precision_bits},
          {"M", interval_json(certificate.m, digits)},
          {"alpha", interval_json(certificate.alpha, digits)},
          {"beta", interval_json(certificate.beta, digits)},
          {"gamma", interval_json(certificate.gamma, digits)},
          {"gamma_width", certificate.gamma.width().to_string(6, MPFR_RNDU)},
          {"gamma_star", certificate.gamma_star.to_string(digits)},
          {"all_envelopes_verified", certificate.all_envelopes_verified()},
          {"terms", terms}};
}

std::string certificate_csv(const GammaCertificate& certificate, int digits) {
  std::ostringstream out;
  out << "n,gamma_n,error_bound\n";
  for (const GammaTerm& term : certificate.terms)
    out << term.n << ',' << term.gamma_n.midpoint().to_string(digits) << ','
        << term.error.hi.to_string(digits, MPFR_RNDU) << '\n';
  return out.str();
}

Json to_json(const DepthCensus& census, const std::vector<std::string>& coset_labels) {
  Json totals = Json::array();
  for (const auto& value : census.totals) totals.push_back(value.get_str());
  Json out{{"group", census.group},
           {"n", census.n},
           {"totals", totals},
           {"saturated", census.saturated},
           {"final_radius", census.final_radius},
           {"patience_used", census.patience_used},
           {"elements_visited", census.elements_visited}};
  if (census.per_coset) {
    Json cosets = Json::array();
    for (std::size_t i = 0; i < census.per_coset->size(); ++i) {
      Json values = Json::array();
      for (const auto& value : (*census.per_coset)[i]) values.push_back(value.get_str());
      cosets.push_back({{"label", i < coset_labels.size() ? coset_labels[i] : std::to_string(i)}, {"counts", values}});
    }
    out["per_coset"] = cosets;
  }
  return out;
}

std::string census_csv(const DepthCensus& census, const std::vector<std::string>& coset_labels) {
  std::ostringstream out;
  out << "n,a_n";
  const std::size_t cosets = census.per_coset ? census.per_coset->size() : 0;
  for (std::size_t i = 0; i < cosets; ++i) out << ",p_n(" << (i < coset_labels.size() ? coset_labels[i] : std::to_string(i)) << ')';
  out << ",saturated\n";
  for (std::size_t n = 0; n < census.totals.size(); ++n) {
    out << n << ',' << census.totals[n].get_str();
    for (std::size_t i = 0; i < cosets; ++i) out << ',' << (*census.per_coset)[i][n].get_str();
    out << ',' << (census.saturated ? "true" : "false") << '\n';
  }
  return out.str();
}

Json to_json(const GroupSpec& spec, const NucleusReport& report) {
  Json witnesses = Json::array();
  for (const ContractionWitness& w : report.witnesses)
    witnesses.push_back({{"pair", {spec.format(spec.nucleus()[w.left]), spec.format(spec.nucleus()[w.right])}},
                         {"level", w.level ? Json(*w.level) : Json(nullptr)}});
  return {{"group", spec.name()},
          {"closed_under_sections", report.closed_under_sections},
          {"pairwise_distinct", report.pairwise_distinct},
          {"max_level_used", report.max_level_used},
          {"ok", report.ok()},
          {"failures", report.failures},
          {"witnesses", witnesses}};
}

}  // namespace pgrowth
