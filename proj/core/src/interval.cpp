#include "lucastk/interval.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "lucastk/errors.hpp"

namespace lucastk {

BigFloat::BigFloat(mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept : BigFloat(other) {}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

namespace {

std::string format_mpfr(const char* fmt, int digits, mpfr_rnd_t rnd, mpfr_srcptr x) {
  char* buffer = nullptr;
  int n = mpfr_asprintf(&buffer, fmt, digits, rnd, x);
  if (n < 0 || buffer == nullptr) throw Error("mpfr_asprintf failed");
  std::string out(buffer, static_cast<std::size_t>(n));
  mpfr_free_str(buffer);
  return out;
}

}  // namespace

std::string BigFloat::to_sci(int digits, mpfr_rnd_t rnd) const {
  return format_mpfr("%.*R*e", std::max(digits - 1, 0), rnd, value_);
}

std::string BigFloat::to_fixed(int decimals, mpfr_rnd_t rnd) const {
  return format_mpfr("%.*R*f", std::max(decimals, 0), rnd, value_);
}

Interval::Interval(mpfr_prec_t precision) : lower_(precision), upper_(precision) {}

Interval Interval::from_int(const Int& x, mpfr_prec_t precision) {
  Interval r(precision);
  mpfr_set_z(r.lower_.get(), x.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.upper_.get(), x.get_mpz_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_long(long x, mpfr_prec_t precision) {
  Interval r(precision);
  mpfr_set_si(r.lower_.get(), x, MPFR_RNDD);
  mpfr_set_si(r.upper_.get(), x, MPFR_RNDU);
  return r;
}

Interval Interval::from_rational(const Rational& x, mpfr_prec_t precision) {
  Interval r(precision);
  mpfr_set_q(r.lower_.get(), x.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.upper_.get(), x.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_decimal(std::string_view text, mpfr_prec_t precision) {
  std::string s(text);
  Interval r(precision);
  char* end = nullptr;
  mpfr_strtofr(r.lower_.get(), s.c_str(), &end, 10, MPFR_RNDD);
  if (end == s.c_str() || *end != '\0') throw InvalidArgument("not a decimal number: '" + s + "'");
  mpfr_strtofr(r.upper_.get(), s.c_str(), &end, 10, MPFR_RNDU);
  return r;
}

Interval Interval::from_bounds(const BigFloat& lower, const BigFloat& upper) {
  if (mpfr_greater_p(lower.get(), upper.get())) throw InvalidArgument("interval bounds out of order");
  mpfr_prec_t p = std::max(lower.precision(), upper.precision());
  Interval r(p);
  mpfr_set(r.lower_.get(), lower.get(), MPFR_RNDD);
  mpfr_set(r.upper_.get(), upper.get(), MPFR_RNDU);
  return r;
}

bool Interval::is_point() const { return mpfr_equal_p(lower_.get(), upper_.get()) != 0; }

bool Interval::contains_zero() const {
  return mpfr_sgn(lower_.get()) <= 0 && mpfr_sgn(upper_.get()) >= 0;
}

bool Interval::is_positive() const { return mpfr_sgn(lower_.get()) > 0; }

bool Interval::is_negative() const { return mpfr_sgn(upper_.get()) < 0; }

bool Interval::contains(const Interval& inner) const {
  return mpfr_lessequal_p(lower_.get(), inner.lower_.get()) &&
         mpfr_greaterequal_p(upper_.get(), inner.upper_.get());
}

bool Interval::contains(const Int& x) const {
  return mpfr_cmp_z(lower_.get(), x.get_mpz_t()) <= 0 && mpfr_cmp_z(upper_.get(), x.get_mpz_t()) >= 0;
}

bool Interval::overlaps(const Interval& other) const {
  return mpfr_lessequal_p(lower_.get(), other.upper_.get()) &&
         mpfr_lessequal_p(other.lower_.get(), upper_.get());
}

bool Interval::certainly_less(const Interval& other) const {
  return mpfr_less_p(upper_.get(), other.lower_.get()) != 0;
}

BigFloat Interval::width() const {
  BigFloat w(precision());
  mpfr_sub(w.get(), upper_.get(), lower_.get(), MPFR_RNDU);
  return w;
}

BigFloat Interval::midpoint() const {
  BigFloat m(precision() + 1);
  mpfr_add(m.get(), lower_.get(), upper_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return m;
}

Int Interval::floor_lower() const {
  Int r;
  mpfr_get_z(r.get_mpz_t(), lower_.get(), MPFR_RNDD);
  return r;
}

Int Interval::floor_upper() const {
  Int r;
  mpfr_get_z(r.get_mpz_t(), upper_.get(), MPFR_RNDD);
  return r;
}

Int Interval::ceil_upper() const {
  Int r;
  mpfr_get_z(r.get_mpz_t(), upper_.get(), MPFR_RNDU);
  return r;
}

double Interval::approx() const { return mpfr_get_d(midpoint().get(), MPFR_RNDN); }

Interval Interval::operator-() const {
  Interval r(precision());
  mpfr_neg(r.lower_.get(), upper_.get(), MPFR_RNDD);
  mpfr_neg(r.upper_.get(), lower_.get(), MPFR_RNDU);
  return r;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(joint_precision(a, b));
  mpfr_add(r.lower_.get(), a.lower_.get(), b.lower_.get(), MPFR_RNDD);
  mpfr_add(r.upper_.get(), a.upper_.get(), b.upper_.get(), MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(joint_precision(a, b));
  mpfr_sub(r.lower_.get(), a.lower_.get(), b.upper_.get(), MPFR_RNDD);
  mpfr_sub(r.upper_.get(), a.upper_.get(), b.lower_.get(), MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  mpfr_prec_t p = joint_precision(a, b);
  Interval r(p);
  BigFloat t(p);
  mpfr_srcptr as[2] = {a.lower_.get(), a.upper_.get()};
  mpfr_srcptr bs[2] = {b.lower_.get(), b.upper_.get()};
  mpfr_set_inf(r.lower_.get(), 1);
  mpfr_set_inf(r.upper_.get(), -1);
  for (mpfr_srcptr x : as) {
    for (mpfr_srcptr y : bs) {
      mpfr_mul(t.get(), x, y, MPFR_RNDD);
      if (mpfr_less_p(t.get(), r.lower_.get())) mpfr_set(r.lower_.get(), t.get(), MPFR_RNDD);
      mpfr_mul(t.get(), x, y, MPFR_RNDU);
      if (mpfr_greater_p(t.get(), r.upper_.get())) mpfr_set(r.upper_.get(), t.get(), MPFR_RNDU);
    }
  }
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw InvalidArgument("division by an interval containing zero");
  mpfr_prec_t p = joint_precision(a, b);
  Interval inv(p);
  mpfr_ui_div(inv.lower_.get(), 1, b.upper_.get(), MPFR_RNDD);
  mpfr_ui_div(inv.upper_.get(), 1, b.lower_.get(), MPFR_RNDU);
  return a * inv;
}

Interval abs(const Interval& x) {
  if (mpfr_sgn(x.lower_.get()) >= 0) return x;
  if (mpfr_sgn(x.upper_.get()) <= 0) return -x;
  Interval r(x.precision());
  mpfr_set_zero(r.lower_.get(), 1);
  mpfr_neg(r.upper_.get(), x.lower_.get(), MPFR_RNDU);
  if (mpfr_greater_p(x.upper_.get(), r.upper_.get())) mpfr_set(r.upper_.get(), x.upper_.get(), MPFR_RNDU);
  return r;
}

Interval sqrt(const Interval& x) {
  if (mpfr_sgn(x.lower_.get()) < 0) throw InvalidArgument("sqrt of an interval with negative members");
  Interval r(x.precision());
  mpfr_sqrt(r.lower_.get(), x.lower_.get(), MPFR_RNDD);
  mpfr_sqrt(r.upper_.get(), x.upper_.get(), MPFR_RNDU);
  return r;
}

Interval log(const Interval& x) {
  if (!x.is_positive()) throw InvalidArgument("log of an interval with non-positive members");
  Interval r(x.precision());
  mpfr_log(r.lower_.get(), x.lower_.get(), MPFR_RNDD);
  mpfr_log(r.upper_.get(), x.upper_.get(), MPFR_RNDU);
  return r;
}

Interval exp(const Interval& x) {
  Interval r(x.precision());
  mpfr_exp(r.lower_.get(), x.lower_.get(), MPFR_RNDD);
  mpfr_exp(r.upper_.get(), x.upper_.get(), MPFR_RNDU);
  return r;
}

Interval pow(const Interval& x, unsigned long exponent) {
  Interval r(x.precision());
  if (exponent == 0) return Interval::from_long(1, x.precision());
  bool odd = (exponent & 1) != 0;
  if (odd || mpfr_sgn(x.lower_.get()) >= 0) {
    mpfr_pow_ui(r.lower_.get(), x.lower_.get(), exponent, MPFR_RNDD);
    mpfr_pow_ui(r.upper_.get(), x.upper_.get(), exponent, MPFR_RNDU);
  } else if (mpfr_sgn(x.upper_.get()) <= 0) {
    mpfr_pow_ui(r.lower_.get(), x.upper_.get(), exponent, MPFR_RNDD);
    mpfr_pow_ui(r.upper_.get(), x.lower_.get(), exponent, MPFR_RNDU);
  } else {
    Interval m = abs(x);
    mpfr_set_zero(r.lower_.get(), 1);
    mpfr_pow_ui(r.upper_.get(), m.upper_.get(), exponent, MPFR_RNDU);
  }
  return r;
}

Interval pow(const Interval& x, const Interval& y) { return exp(y * log(x)); }

Interval hull(const Interval& a, const Interval& b) {
  Interval r(joint_precision(a, b));
  mpfr_min(r.lower_.get(), a.lower_.get(), b.lower_.get(), MPFR_RNDD);
  mpfr_max(r.upper_.get(), a.upper_.get(), b.upper_.get(), MPFR_RNDU);
  return r;
}

}  // namespace lucastk
