#include <doctest.h>

#include "helpers.h"
#include "pgrowth/catalog.h"
#include "pgrowth/error.h"
#include "pgrowth/specialized.h"
#include "pgrowth/verify.h"

using namespace pgrowth;

namespace {

mpz_class power(mpz_class base, unsigned long exponent) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

}  // namespace

TEST_CASE("grigorchuk specialized recursion") {
  const GrowthSeries series = grigorchuk_growth(3);
  CHECK(series.totals == std::vector<mpz_class>{5, 16, 68, 1160});
  CHECK(series.provenance == Provenance::Specialized);
  CHECK(series.sums_consistent());
  CHECK(grigorchuk_growth(0).totals == std::vector<mpz_class>{5});
  const auto states = grigorchuk_states(3);
  REQUIRE(states.size() == 3);
  for (const auto& state : states) CHECK(state.total() > 0);
  CHECK(states[1].total() == 68);
  CHECK(states[0].next().total() == states[1].total());
}

TEST_CASE("grigorchuk identity") {
  const GrowthSeries series = grigorchuk_growth(21);
  const auto states = grigorchuk_states(20);
  for (int n = 1; n <= 20; ++n) {
    const auto& st = states[n - 1];
    const mpz_class root = st.x - st.z + st.X - st.Z;
    CHECK(4 * series.totals[n + 1] - series.totals[n] * series.totals[n] == 4 * root * root);
  }
}

TEST_CASE("circulant layout") {
  const auto c = circulant(GgsVector::make(3, {1, 2}));
  CHECK(c == std::vector<std::vector<int>>{{0, 1, 2}, {2, 0, 1}, {1, 2, 0}});
}

TEST_CASE("GGS parameters") {
  const GgsParameters params = ggs_parameters(GgsVector::make(3, {1, 2}));
  CHECK(params.x1 == 3);
  CHECK(params.y1 == 3);
  for (const GgsVector& v : {GgsVector::make(5, {1, 0, 0, 0}), GgsVector::make(5, {1, 2, 0, 0}),
                             GgsVector::make(7, {1, 2, 0, 0, 0, 0}), GgsVector::make(7, {1, 1, 0, 0, 0, 0})})
    CHECK(ggs_parameters(v).x1 >= 1);
  try {
    ggs_parameters(GgsVector::make(3, {1, 1}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonSymmetricRequired);
  }
}

TEST_CASE("GGS closed form") {
  const GrowthSeries s = ggs_growth(GgsVector::make(3, {1, 2}), 3);
  CHECK(s.totals[0] == 5);
  CHECK(s.totals[1] == 27);
  CHECK(s.totals[2] == 2187);
  CHECK(s.totals[3] == 3 * power(9, 9));
  CHECK(s.per_coset[0][2] + 2 * s.per_coset[1][2] == power(9, 3));
  CHECK(s.provenance == Provenance::ClosedForm);
  CHECK(s.sums_consistent());
  CHECK(ggs_growth(GgsVector::make(5, {1, 0, 0, 0}), 0).totals[0] == 9);
  CHECK(ggs_growth(GgsVector::make(7, {1, 2, 0, 0, 0, 0}), 0).totals[0] == 13);
}

TEST_CASE("GGS closed form matches the coset recursion") {
  for (const GgsVector& v : {GgsVector::make(3, {1, 2}), GgsVector::make(5, {1, 0, 0, 0}),
                             GgsVector::make(5, {1, 2, 0, 0})}) {
    const int depth = v.p == 3 ? 4 : 3;
    CHECK(ggs_growth(v, depth).totals == ggs_coset_recursion(v, depth).totals);
  }
  for (const GgsVector& v : {GgsVector::make(7, {1, 2, 0, 0, 0, 0}), GgsVector::make(7, {1, 1, 0, 0, 0, 0})})
    CHECK(ggs_growth(v, 2).totals == ggs_coset_recursion(v, 2).totals);
}

TEST_CASE("nowhere-zero tuple counts") {
  CHECK(z_counts(3, 1).z == 0);
  CHECK(z_counts(3, 1).z_prime == 1);
  CHECK(z_counts(3, 2).z == 2);
  CHECK(z_counts(3, 2).z_prime == 1);
  for (int p : {3, 5, 7}) {
    CHECK(z_counts(p, 0).z == 1);
    CHECK(z_counts(p, 0).z_prime == 0);
    for (int l = 0; l <= 6; ++l) {
      const ZCounts z = z_counts(p, l);
      REQUIRE(z.brute_z.has_value());
      CHECK(*z.brute_z == z.z);
      CHECK(*z.brute_z_prime == z.z_prime);
    }
  }
}

TEST_CASE("apollonian closed form") {
  const GrowthSeries s = apollonian_growth(6);
  CHECK(s.totals[0] == 7);
  CHECK(s.totals[1] == 1029);
  CHECK(s.totals[2] == power(3, 4) * power(7, 9));
  for (int n = 0; n < 6; ++n) CHECK(s.totals[n + 1] == 3 * power(s.totals[n], 3));
  CHECK(s.sums_consistent());
}

TEST_CASE("stabilizer bound") {
  CHECK(stabilizer_bound_check(grigorchuk_growth(12), 2, 2).passed);
  CHECK(stabilizer_bound_check(apollonian_growth(6), 6, 3).passed);
  CHECK(stabilizer_bound_check(ggs_growth(GgsVector::make(3, {1, 2}), 4), 3, 3).passed);
  CHECK_FALSE(stabilizer_bound_check(apollonian_growth(3), 2, 3).passed);
}
