#include <doctest.h>

#include <cmath>

#include "helpers.h"
#include "pgrowth/asymptotics.h"
#include "pgrowth/catalog.h"
#include "pgrowth/error.h"
#include "pgrowth/specialized.h"

using namespace pgrowth;

namespace {

bool encloses(const Interval& interval, double value, double slack = 1e-12) {
  return mpfr_cmp_d(interval.lo.get(), value + slack) <= 0 && mpfr_cmp_d(interval.hi.get(), value - slack) >= 0;
}

bool subset(const Interval& inner, const Interval& outer) {
  return mpfr_cmp(outer.lo.get(), inner.lo.get()) <= 0 && mpfr_cmp(inner.hi.get(), outer.hi.get()) <= 0;
}

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

TEST_CASE("ratio envelopes") {
  const RatioEnvelope g = ratio_envelope(grigorchuk_growth(10).totals, 2);
  CHECK(g.a_emp >= mpq_class(1, 4));
  CHECK(g.b_emp <= 2);
  const RatioEnvelope a = ratio_envelope(apollonian_growth(5).totals, 3);
  CHECK(a.a_emp == 3);
  CHECK(a.b_emp == 3);
  const RatioEnvelope one = ratio_envelope({1, 1, 1, 1}, 2);
  CHECK(one.a_emp == 1);
  CHECK(one.b_emp == 1);
  CHECK(kind_of([] { ratio_envelope({5}, 2); }) == ErrorKind::EmptySeries);
  CHECK(kind_of([] { ratio_envelope({5, 0}, 2); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("grigorchuk gamma certificate") {
  const GammaCertificate cert = gamma_certificate(grigorchuk_growth(10).totals, 2, mpq_class(1, 4), 2);
  CHECK_FALSE(cert.empirical);
  CHECK(encloses(cert.m, std::log(4.0)));
  CHECK(encloses(cert.alpha, 0.25));
  CHECK(encloses(cert.beta, 4.0));
  CHECK(cert.all_envelopes_verified());
  CHECK_FALSE(cert.gamma.empty());
  CHECK(encloses(cert.gamma, 0.71, 0.01));
  CHECK(cert.gamma.width().to_double() <= 2 * std::log(4.0) / 1024 + 1e-12);
}

TEST_CASE("apollonian gamma contains the closed-form constant") {
  const GammaCertificate cert = gamma_certificate(apollonian_growth(6).totals, 3, 3, 3);
  CHECK(encloses(cert.gamma, std::log(7 * std::sqrt(3.0)), 1e-15));
  CHECK(cert.all_envelopes_verified());
}

TEST_CASE("GGS gamma") {
  const GrowthSeries s = ggs_growth(GgsVector::make(3, {1, 2}), 6);
  const GammaCertificate cert = gamma_certificate(s.totals, 3, mpq_class(1, 9), 1);
  CHECK(encloses(cert.gamma, std::log(9.0) / 3, 1e-15));
  CHECK(cert.all_envelopes_verified());
}

TEST_CASE("enclosures nest and errors shrink") {
  const GammaCertificate cert = gamma_certificate(grigorchuk_growth(12).totals, 2, mpq_class(1, 4), 2);
  for (std::size_t i = 1; i < cert.terms.size(); ++i) {
    CHECK(mpfr_less_p(cert.terms[i].error.hi.get(), cert.terms[i - 1].error.lo.get()));
    CHECK(subset(cert.gamma, cert.terms[i].enclosure));
  }
}

TEST_CASE("constant series") {
  const GammaCertificate cert = certify_double_exponential({1, 1, 1, 1}, 2);
  CHECK(cert.empirical);
  CHECK(encloses(cert.gamma, 0.0, 0.0));
  CHECK(cert.all_envelopes_verified());
}

TEST_CASE("empirical certificate") {
  const GammaCertificate cert = certify_double_exponential(grigorchuk_growth(10).totals, 2);
  CHECK(cert.empirical);
  CHECK(cert.all_envelopes_verified());
  CHECK(kind_of([] { certify_double_exponential({5, 16}, 2); }) == ErrorKind::EmptySeries);
}

TEST_CASE("ratio bounds must hold") {
  const auto totals = grigorchuk_growth(6).totals;
  CHECK(kind_of([&] { gamma_certificate(totals, 2, 1, 2); }) == ErrorKind::RatioBoundViolated);
  CHECK(kind_of([&] { gamma_certificate(totals, 2, mpq_class(1, 4), mpq_class(1, 2)); }) ==
        ErrorKind::RatioBoundViolated);
}

TEST_CASE("precision") {
  const auto totals = grigorchuk_growth(10).totals;
  CHECK(kind_of([&] { gamma_certificate(totals, 2, mpq_class(1, 4), 2, 24); }) ==
        ErrorKind::PrecisionInsufficient);
  const GammaCertificate low = gamma_certificate(totals, 2, mpq_class(1, 4), 2, 128);
  const GammaCertificate high = gamma_certificate(totals, 2, mpq_class(1, 4), 2, 512);
  CHECK(low.all_envelopes_verified());
  CHECK(high.all_envelopes_verified());
  CHECK(mpfr_cmp(high.gamma.width().get(), low.gamma.width().get()) <= 0);
  CHECK(default_gamma_precision(11, 2) >= 256);
}
