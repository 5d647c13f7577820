#include "pgrowth/asymptotics.h"

#include <algorithm>

#include "pgrowth/error.h"

namespace pgrowth {

namespace {

// Rounding error in gamma_N must stay below (M / d^N) / 2^kSlackBits.
constexpr unsigned long kSlackBits = 20;

void widen_exponent_range() {
  mpfr_set_emax(mpfr_get_emax_max());
  mpfr_set_emin(mpfr_get_emin_min());
}

Interval exact_interval(const mpz_class& value, mpfr_prec_t precision) {
  Interval out(precision);
  mpfr_set_z(out.lo.get(), value.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(out.hi.get(), value.get_mpz_t(), MPFR_RNDU);
  return out;
}

/// Enclosure of ln(value) for value >= 1.
Interval log_interval(const mpz_class& value, mpfr_prec_t precision) {
  Interval out = exact_interval(value, precision);
  mpfr_log(out.lo.get(), out.lo.get(), MPFR_RNDD);
  mpfr_log(out.hi.get(), out.hi.get(), MPFR_RNDU);
  return out;
}

/// Enclosure of |ln q| for q > 0.
Interval abs_log_interval(const mpq_class& q, mpfr_prec_t precision) {
  const Interval num = log_interval(q.get_num(), precision);
  const Interval den = log_interval(q.get_den(), precision);
  Interval out(precision);
  mpfr_sub(out.lo.get(), num.lo.get(), den.hi.get(), MPFR_RNDD);
  mpfr_sub(out.hi.get(), num.hi.get(), den.lo.get(), MPFR_RNDU);
  if (mpfr_sgn(out.hi.get()) <= 0) {
    mpfr_neg(out.lo.get(), out.lo.get(), MPFR_RNDN);
    mpfr_neg(out.hi.get(), out.hi.get(), MPFR_RNDN);
    mpfr_swap(out.lo.get(), out.hi.get());
  } else if (mpfr_sgn(out.lo.get()) < 0) {
    mpfr_neg(out.lo.get(), out.lo.get(), MPFR_RNDN);
    mpfr_max(out.hi.get(), out.hi.get(), out.lo.get(), MPFR_RNDU);
    mpfr_set_zero(out.lo.get(), 1);
  }
  return out;
}

mpz_class power(unsigned d, int n) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), d, static_cast<unsigned long>(n));
  return out;
}

void require_positive_series(const std::vector<mpz_class>& series) {
  for (const auto& term : series)
    if (term <= 0) throw Error(ErrorKind::InvalidArgument, "series terms must be positive");
}

}  // namespace

bool GammaCertificate::all_envelopes_verified() const {
  return std::all_of(terms.begin(), terms.end(), [](const GammaTerm& t) { return t.envelope_verified; });
}

RatioEnvelope ratio_envelope(const std::vector<mpz_class>& series, unsigned d) {
  if (series.size() < 2) throw Error(ErrorKind::EmptySeries, "ratio envelope needs at least two terms");
  require_positive_series(series);
  RatioEnvelope out;
  for (std::size_t n = 0; n + 1 < series.size(); ++n) {
    mpz_class denominator;
    mpz_pow_ui(denominator.get_mpz_t(), series[n].get_mpz_t(), d);
    mpq_class ratio(series[n + 1], denominator);
    ratio.canonicalize();
    if (n == 0 || ratio < out.a_emp) {
      out.a_emp = ratio;
      out.argmin = static_cast<int>(n);
    }
    if (n == 0 || ratio > out.b_emp) {
      out.b_emp = ratio;
      out.argmax = static_cast<int>(n);
    }
  }
  return out;
}

mpfr_prec_t default_gamma_precision(std::size_t terms, unsigned d) {
  mpfr_prec_t bits_per_level = 1;
  while ((1u << bits_per_level) < d) ++bits_per_level;
  return 256 + static_cast<mpfr_prec_t>(terms) * bits_per_level;
}

GammaCertificate gamma_certificate(const std::vector<mpz_class>& series, unsigned d, const mpq_class& a,
                                   const mpq_class& b, mpfr_prec_t precision_bits) {
  if (series.empty()) throw Error(ErrorKind::EmptySeries, "gamma certificate needs at least one term");
  if (d < 2) throw Error(ErrorKind::InvalidArgument, "growth exponent d must be at least 2");
  if (a <= 0 || a > b) throw Error(ErrorKind::InvalidArgument, "ratio bounds need 0 < A <= B");
  require_positive_series(series);
  if (series.size() >= 2) {
    const RatioEnvelope envelope = ratio_envelope(series, d);
    if (a > envelope.a_emp)
      throw Error(ErrorKind::RatioBoundViolated, "A exceeds a_{n+1}/a_n^d at n = " + std::to_string(envelope.argmin));
    if (b < envelope.b_emp)
      throw Error(ErrorKind::RatioBoundViolated, "B is below a_{n+1}/a_n^d at n = " + std::to_string(envelope.argmax));
  }

  widen_exponent_range();
  const mpfr_prec_t prec = precision_bits > 0 ? precision_bits : default_gamma_precision(series.size(), d);
  GammaCertificate cert(prec);
  cert.d = d;
  cert.a = a;
  cert.b = b;

  const Interval log_a = abs_log_interval(a, prec);
  const Interval log_b = abs_log_interval(b, prec);
  mpfr_max(cert.m.lo.get(), log_a.lo.get(), log_b.lo.get(), MPFR_RNDD);
  mpfr_max(cert.m.hi.get(), log_a.hi.get(), log_b.hi.get(), MPFR_RNDU);
  mpfr_div_ui(cert.m.lo.get(), cert.m.lo.get(), d - 1, MPFR_RNDD);
  mpfr_div_ui(cert.m.hi.get(), cert.m.hi.get(), d - 1, MPFR_RNDU);

  mpfr_neg(cert.alpha.lo.get(), cert.m.hi.get(), MPFR_RNDN);
  mpfr_exp(cert.alpha.lo.get(), cert.alpha.lo.get(), MPFR_RNDD);
  mpfr_neg(cert.alpha.hi.get(), cert.m.lo.get(), MPFR_RNDN);
  mpfr_exp(cert.alpha.hi.get(), cert.alpha.hi.get(), MPFR_RNDU);
  mpfr_exp(cert.beta.lo.get(), cert.m.lo.get(), MPFR_RNDD);
  mpfr_exp(cert.beta.hi.get(), cert.m.hi.get(), MPFR_RNDU);

  mpfr_set_inf(cert.gamma.lo.get(), -1);
  mpfr_set_inf(cert.gamma.hi.get(), 1);
  std::vector<Interval> levels;
  for (std::size_t n = 0; n < series.size(); ++n) {
    GammaTerm term(prec);
    term.n = static_cast<int>(n);
    const Interval dn = exact_interval(power(d, term.n), prec);
    const Interval log_an = log_interval(series[n], prec);
    mpfr_div(term.gamma_n.lo.get(), log_an.lo.get(), dn.hi.get(), MPFR_RNDD);
    mpfr_div(term.gamma_n.hi.get(), log_an.hi.get(), dn.lo.get(), MPFR_RNDU);
    mpfr_div(term.error.lo.get(), cert.m.lo.get(), dn.hi.get(), MPFR_RNDD);
    mpfr_div(term.error.hi.get(), cert.m.hi.get(), dn.lo.get(), MPFR_RNDU);
    mpfr_sub(term.enclosure.lo.get(), term.gamma_n.lo.get(), term.error.hi.get(), MPFR_RNDD);
    mpfr_add(term.enclosure.hi.get(), term.gamma_n.hi.get(), term.error.hi.get(), MPFR_RNDU);
    mpfr_max(cert.gamma.lo.get(), cert.gamma.lo.get(), term.enclosure.lo.get(), MPFR_RNDD);
    mpfr_min(cert.gamma.hi.get(), cert.gamma.hi.get(), term.enclosure.hi.get(), MPFR_RNDU);
    cert.terms.push_back(std::move(term));
    levels.push_back(dn);
  }
  if (cert.gamma.empty())
    throw Error(ErrorKind::RatioBoundViolated, "gamma enclosures do not intersect; the ratio bounds are not valid");

  const GammaTerm& last = cert.terms.back();
  if (mpfr_sgn(cert.m.lo.get()) > 0) {
    BigFloat allowed(prec);
    mpfr_div_2ui(allowed.get(), last.error.lo.get(), kSlackBits, MPFR_RNDD);
    if (mpfr_greater_p(last.gamma_n.width().get(), allowed.get()))
      throw Error(ErrorKind::PrecisionInsufficient,
                  "rounding error in gamma_N is not small against M/d^N; raise the precision above " +
                      std::to_string(prec) + " bits");
  }

  cert.gamma_star = cert.gamma.midpoint();
  BigFloat exponent(prec), bound(prec);
  for (std::size_t n = 0; n < cert.terms.size(); ++n) {
    GammaTerm& term = cert.terms[n];
    const mpz_class& an = series[n];
    // alpha e^(g d^n) <= a_n, with every rounding pushing the left side up.
    mpfr_mul(exponent.get(), cert.gamma_star.get(), levels[n].hi.get(), MPFR_RNDU);
    mpfr_sub(exponent.get(), exponent.get(), cert.m.lo.get(), MPFR_RNDU);
    mpfr_exp(bound.get(), exponent.get(), MPFR_RNDU);
    const bool lower_ok = mpfr_cmp_z(bound.get(), an.get_mpz_t()) <= 0;
    // a_n <= beta e^(g d^n), with every rounding pushing the right side down.
    mpfr_mul(exponent.get(), cert.gamma_star.get(), levels[n].lo.get(), MPFR_RNDD);
    mpfr_add(exponent.get(), exponent.get(), cert.m.lo.get(), MPFR_RNDD);
    mpfr_exp(bound.get(), exponent.get(), MPFR_RNDD);
    const bool upper_ok = mpfr_cmp_z(bound.get(), an.get_mpz_t()) >= 0;
    term.envelope_verified = lower_ok && upper_ok;
  }
  return cert;
}

GammaCertificate certify_double_exponential(const std::vector<mpz_class>& series, unsigned d,
                                            mpfr_prec_t precision_bits) {
  if (series.size() < 3) throw Error(ErrorKind::EmptySeries, "certification needs at least three terms");
  const RatioEnvelope envelope = ratio_envelope(series, d);
  GammaCertificate cert = gamma_certificate(series, d, envelope.a_emp, envelope.b_emp, precision_bits);
  cert.empirical = true;
  return cert;
}

}  // namespace pgrowth
