#pragma once

#include <mpfr.h>

#include <string>
#include <string_view>

#include "lucastk/bigint.hpp"

namespace lucastk {

/// Owning wrapper around an mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t precision = 128);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  /// Scientific notation with `digits` significant digits, rounded per `rnd`.
  std::string to_sci(int digits, mpfr_rnd_t rnd = MPFR_RNDN) const;
  /// Fixed notation with `decimals` digits after the point.
  std::string to_fixed(int decimals, mpfr_rnd_t rnd = MPFR_RNDN) const;

 private:
  mpfr_t value_;
};

/// Closed interval [lower, upper] of MPFR values. Every operation rounds its
/// lower end toward -inf and its upper end toward +inf, so the result always
/// contains the exact value of the operation applied to any members of the
/// operands.
class Interval {
 public:
  explicit Interval(mpfr_prec_t precision = 128);

  static Interval from_int(const Int& x, mpfr_prec_t precision);
  static Interval from_long(long x, mpfr_prec_t precision);
  static Interval from_rational(const Rational& x, mpfr_prec_t precision);
  /// Encloses a decimal literal such as "9.5e12" or "-0.3".
  static Interval from_decimal(std::string_view text, mpfr_prec_t precision);
  static Interval from_bounds(const BigFloat& lower, const BigFloat& upper);

  mpfr_prec_t precision() const { return lower_.precision(); }
  const BigFloat& lower() const { return lower_; }
  const BigFloat& upper() const { return upper_; }

  bool is_point() const;
  bool contains_zero() const;
  bool is_positive() const;
  bool is_negative() const;
  bool contains(const Interval& inner) const;
  bool contains(const Int& x) const;
  bool overlaps(const Interval& other) const;

  /// Every member of *this is strictly below every member of `other`.
  bool certainly_less(const Interval& other) const;
  bool certainly_greater(const Interval& other) const { return other.certainly_less(*this); }

  BigFloat width() const;
  BigFloat midpoint() const;
  Int floor_lower() const;
  Int floor_upper() const;
  Int ceil_upper() const;

  std::string to_sci(int digits) const { return midpoint().to_sci(digits); }
  std::string to_fixed(int decimals) const { return midpoint().to_fixed(decimals); }
  double approx() const;

  Interval operator-() const;
  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);

  friend Interval abs(const Interval& x);
  friend Interval sqrt(const Interval& x);
  friend Interval log(const Interval& x);
  friend Interval exp(const Interval& x);
  friend Interval pow(const Interval& x, unsigned long exponent);
  /// x^y for x > 0.
  friend Interval pow(const Interval& x, const Interval& y);
  friend Interval hull(const Interval& a, const Interval& b);

 private:
  BigFloat lower_;
  BigFloat upper_;
};

/// Precision used for combining two operands.
inline mpfr_prec_t joint_precision(const Interval& a, const Interval& b) {
  return a.precision() > b.precision() ? a.precision() : b.precision();
}

}  // namespace lucastk
