#include <doctest.h>

#include "helpers.h"
#include "pgrowth/catalog.h"
#include "pgrowth/error.h"
#include "pgrowth/specialized.h"

using namespace pgrowth;

namespace {

ErrorKind build_error(const GroupSpec& spec, const BranchSetup& setup, const std::vector<std::string>& s) {
  const QuotientTable table = normal_closure_image(spec, spec.parse_all(setup.seeds), setup.level);
  try {
    build_branch_data(spec, spec.parse_all(setup.transversal), spec.parse_all(s), table);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("grigorchuk branch data") {
  const GroupSpec g = grigorchuk();
  const BranchSetup setup = grigorchuk_branch_setup();
  const BranchData data = testing::branch_data_for(g, setup);
  CHECK(data.k() == 16);
  CHECK(data.l() == 4);
  CHECK_NOTHROW(data.validate());
  CHECK(data.p0 == std::vector<std::uint64_t>{1, 1, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0});
  const QuotientTable k = normal_closure_image(g, g.parse_all(setup.seeds), setup.level);
  CHECK(section_subgroup_index(g, k) == 4);
}

TEST_CASE("generic recursion") {
  const GroupSpec g = grigorchuk();
  const GrowthSeries series = iterate_growth(testing::branch_data_for(g, grigorchuk_branch_setup()), 12);
  CHECK(series.totals[1] == 16);
  CHECK(series.totals[2] == 68);
  CHECK(series.totals[3] == 1160);
  CHECK(series.sums_consistent());
  CHECK(series.totals == grigorchuk_growth(12).totals);

  const GroupSpec apol = apollonian();
  const GrowthSeries a = iterate_growth(testing::branch_data_for(apol, apollonian_branch_setup()), 6);
  CHECK(a.totals == apollonian_growth(6).totals);
  CHECK(a.totals[1] == 1029);
}

TEST_CASE("a zero initial vector yields zero counts") {
  BranchData data = testing::branch_data_for(grigorchuk(), grigorchuk_branch_setup());
  std::fill(data.p0.begin(), data.p0.end(), 0);
  const GrowthSeries series = iterate_growth(data, 5);
  for (const mpz_class& total : series.totals) CHECK(total == 0);
}

TEST_CASE("section transversal validation") {
  const GroupSpec g = grigorchuk();
  const BranchSetup setup = grigorchuk_branch_setup();
  std::vector<std::string> s = setup.section_transversal;
  CHECK(build_error(g, setup, {s[0], s[1], s[2]}) == ErrorKind::InvalidArgument);
  CHECK(build_error(g, setup, {s[0], s[1], s[2], "a"}) == ErrorKind::InvalidArgument);
  CHECK(build_error(g, setup, {s[0], s[1], s[2], s[2]}) == ErrorKind::AmbiguousTransversal);
  BranchSetup short_t = setup;
  short_t.transversal.pop_back();
  CHECK(build_error(g, short_t, s) == ErrorKind::InvalidArgument);
}

TEST_CASE("branch data validation") {
  BranchData data = testing::branch_data_for(grigorchuk(), grigorchuk_branch_setup());
  data.table[0][0].cosets[0] = 99;
  CHECK_THROWS_AS(data.validate(), Error);
  data = testing::branch_data_for(grigorchuk(), grigorchuk_branch_setup());
  data.p0.pop_back();
  CHECK_THROWS_AS(data.validate(), Error);
}
