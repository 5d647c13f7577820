#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace pgrowth {

/// Owning wrapper around an mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t precision);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Decimal with `digits` significant digits, rounded in the given direction.
  std::string to_string(int digits = 20, mpfr_rnd_t rounding = MPFR_RNDN) const;

 private:
  mpfr_t value_;
};

/// Closed interval [lo, hi] with outward-rounded endpoints.
struct Interval {
  BigFloat lo, hi;

  explicit Interval(mpfr_prec_t precision) : lo(precision), hi(precision) {}

  bool contains(double value) const;
  bool empty() const { return mpfr_greater_p(lo.get(), hi.get()); }
  /// Upper bound on hi - lo.
  BigFloat width() const;
  /// A point inside the interval, rounded to nearest.
  BigFloat midpoint() const;
};

}  // namespace pgrowth
