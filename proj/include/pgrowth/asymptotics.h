#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "pgrowth/bigfloat.h"

namespace pgrowth {

/// Exact extremes of a_{n+1} / a_n^d over the series.
struct RatioEnvelope {
  mpq_class a_emp, b_emp;
  int argmin = 0, argmax = 0;
};

/// Throws EmptySeries for fewer than two terms and InvalidArgument for
/// nonpositive terms.
RatioEnvelope ratio_envelope(const std::vector<mpz_class>& series, unsigned d);

struct GammaTerm {
  int n = 0;
  Interval gamma_n;      // ln a_n / d^n
  Interval error;        // M / d^n
  Interval enclosure;    // gamma_n -+ M / d^n, rounded outward
  bool envelope_verified = false;

  explicit GammaTerm(mpfr_prec_t precision)
      : gamma_n(precision), error(precision), enclosure(precision) {}
};

struct GammaCertificate {
  unsigned d = 2;
  mpq_class a, b;
  bool empirical = false;
  mpfr_prec_t precision_bits = 0;
  Interval m, alpha, beta;
  std::vector<GammaTerm> terms;
  Interval gamma;       // intersection of all enclosures
  BigFloat gamma_star;  // the value used for the envelope checks

  explicit GammaCertificate(mpfr_prec_t precision)
      : precision_bits(precision), m(precision), alpha(precision), beta(precision), gamma(precision),
        gamma_star(precision) {}

  bool all_envelopes_verified() const;
};

/// Default working precision for a series of the given length.
mpfr_prec_t default_gamma_precision(std::size_t terms, unsigned d);

/// Certifies gamma = lim ln a_n / d^n from ratio bounds A <= a_{n+1}/a_n^d <= B.
/// With M = max(|ln A|, |ln B|) / (d-1), every enclosure gamma_n -+ M/d^n
/// contains gamma, and each envelope alpha e^(g d^n) <= a_n <= beta e^(g d^n)
/// with alpha = e^-M, beta = e^M is checked with directed rounding at one
/// point g of the common intersection. Throws RatioBoundViolated when A or B
/// do not bound the observed ratios, PrecisionInsufficient when rounding error
/// in gamma_N is not far below M / d^N.
GammaCertificate gamma_certificate(const std::vector<mpz_class>& series, unsigned d, const mpq_class& a,
                                   const mpq_class& b, mpfr_prec_t precision_bits = 0);

/// ratio_envelope followed by gamma_certificate with the empirical extremes;
/// the result is flagged empirical. Needs at least three terms.
GammaCertificate certify_double_exponential(const std::vector<mpz_class>& series, unsigned d,
                                            mpfr_prec_t precision_bits = 0);

}  // namespace pgrowth
