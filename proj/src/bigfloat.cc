#include "pgrowth/bigfloat.h"

#include <memory>

namespace pgrowth {

BigFloat::BigFloat(mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() {
  mpfr_clear(value_);
}

std::string BigFloat::to_string(int digits, mpfr_rnd_t rounding) const {
  if (mpfr_zero_p(value_)) return "0";
  char* text = nullptr;
  const char* format = rounding == MPFR_RNDD ? "%.*RDg" : rounding == MPFR_RNDU ? "%.*RUg" : "%.*RNg";
  mpfr_asprintf(&text, format, digits, value_);
  std::unique_ptr<char, decltype(&mpfr_free_str)> holder(text, &mpfr_free_str);
  return text ? std::string(text) : std::string();
}

bool Interval::contains(double value) const {
  return mpfr_cmp_d(lo.get(), value) <= 0 && mpfr_cmp_d(hi.get(), value) >= 0;
}

BigFloat Interval::width() const {
  BigFloat out(hi.precision());
  mpfr_sub(out.get(), hi.get(), lo.get(), MPFR_RNDU);
  return out;
}

BigFloat Interval::midpoint() const {
  BigFloat out(hi.precision());
  mpfr_add(out.get(), lo.get(), hi.get(), MPFR_RNDN);
  mpfr_div_2ui(out.get(), out.get(), 1, MPFR_RNDN);
  return out;
}

}  // namespace pgrowth
