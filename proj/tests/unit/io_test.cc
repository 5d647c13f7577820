#include <doctest.h>

#include "helpers.h"
#include "pgrowth/asymptotics.h"
#include "pgrowth/automorphism.h"
#include "pgrowth/catalog.h"
#include "pgrowth/census.h"
#include "pgrowth/error.h"
#include "pgrowth/io.h"
#include "pgrowth/specialized.h"

using namespace pgrowth;

namespace {

ErrorKind kind_of(auto&& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("group spec round trip") {
  for (const GroupSpec& spec : {grigorchuk(), apollonian(), ggs(GgsVector::make(5, {1, 2, 0, 0}))}) {
    const Json json = to_json(spec);
    const GroupSpec back = group_spec_from_json(parse_json(json.dump()));
    CHECK(to_json(back) == json);
    CHECK(back.degree() == spec.degree());
    for (std::size_t i = 0; i < spec.nucleus().size(); ++i) {
      CHECK(back.format(back.nucleus()[i]) == spec.format(spec.nucleus()[i]));
      CHECK(root_permutation(back, back.nucleus()[i]) == root_permutation(spec, spec.nucleus()[i]));
    }
  }
}

TEST_CASE("group spec errors") {
  CHECK(kind_of([] { parse_json("{\"name\": "); }) == ErrorKind::ParseError);
  Json json = to_json(grigorchuk());
  Json missing = json;
  missing.erase("generators");
  CHECK_THROWS_AS(group_spec_from_json(missing), Error);
  Json bad_perm = json;
  bad_perm["generators"][0]["perm"] = Json::array({1, 1});
  CHECK_THROWS_AS(group_spec_from_json(bad_perm), Error);
  Json bad_symbol = json;
  bad_symbol["nucleus"].push_back("q");
  CHECK(kind_of([&] { group_spec_from_json(bad_symbol); }) == ErrorKind::UnknownSymbol);
}

TEST_CASE("branch data round trip") {
  const BranchData data = testing::branch_data_for(apollonian(), apollonian_branch_setup());
  const BranchData back = branch_data_from_json(parse_json(to_json(data).dump()));
  CHECK(back.table == data.table);
  CHECK(back.p0 == data.p0);
  CHECK(back.transversal == data.transversal);
  CHECK(back.section_transversal == data.section_transversal);
}

TEST_CASE("quotient table round trip") {
  const GroupSpec g = grigorchuk();
  const QuotientTable table = normal_closure_image(g, g.parse_all(grigorchuk_branch_setup().seeds), 3);
  const Json json = to_json(g, table);
  CHECK(quotient_table_from_json(g, json).size() == table.size());
  Json wrong = json;
  wrong["ambient_index"] = 15;
  CHECK(kind_of([&] { quotient_table_from_json(g, wrong); }) == ErrorKind::InvalidSpec);
}

TEST_CASE("growth series serialization") {
  const GrowthSeries series = grigorchuk_growth(5);
  const GrowthSeries back = growth_series_from_json(parse_json(to_json(series).dump()));
  CHECK(back.totals == series.totals);
  CHECK(back.per_coset == series.per_coset);
  CHECK(back.coset_labels == series.coset_labels);
  CHECK(back.provenance == series.provenance);

  const std::string csv = growth_series_csv(series, 3);
  CHECK(csv.rfind("n,a_n,digits", 0) == 0);
  CHECK(csv.find("\n2,68,2\n") != std::string::npos);
  CHECK(csv.find("\n3,,4\n") != std::string::npos);
}

TEST_CASE("certificate and census output") {
  const GammaCertificate cert = gamma_certificate(grigorchuk_growth(6).totals, 2, mpq_class(1, 4), 2);
  const Json json = to_json(cert);
  CHECK(json.contains("gamma"));
  CHECK(json["terms"].size() == cert.terms.size());
  CHECK(certificate_csv(cert).rfind("n,gamma_n,error_bound", 0) == 0);

  CensusOptions options;
  options.n = 1;
  const DepthCensus c = census(grigorchuk(), options);
  CHECK(census_csv(c).rfind("n,a_n", 0) == 0);
  CHECK(to_json(c)["totals"].size() == 2);
}
