#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lucastk/bigint.hpp"
#include "lucastk/errors.hpp"
#include "lucastk/interval.hpp"
#include "lucastk/lucas.hpp"

namespace lucastk {

/// A rational number p/q or a root of a0 X^2 + b X + c.
class AlgebraicNumberDesc {
 public:
  enum class Kind { rational, quadratic };

  static AlgebraicNumberDesc rational(const Int& p, const Int& q = 1);
  /// `larger_root` picks the root with the larger real value. Throws
  /// DegenerateQuadratic when the discriminant is a perfect square.
  static AlgebraicNumberDesc quadratic(const Int& a0, const Int& b, const Int& c, bool larger_root);
  /// The dominant root of x^2 - r x - s.
  static AlgebraicNumberDesc dominant_root(const LucasPair& pair);

  Kind kind() const { return kind_; }
  const Rational& as_rational() const { return rational_; }
  Interval value(mpfr_prec_t precision) const;
  /// Both conjugates (one entry for rationals).
  std::vector<Interval> conjugates(mpfr_prec_t precision) const;
  /// Leading coefficient of the primitive minimal polynomial.
  Int leading_coefficient() const;
  unsigned degree() const { return kind_ == Kind::rational ? 1 : 2; }

 private:
  Kind kind_ = Kind::rational;
  Rational rational_;
  Int a0_, b_, c_;
  bool larger_root_ = true;
};

/// h(x) = (ln a0 + sum ln max(|x_i|, 1)) / d.
Interval log_height(const AlgebraicNumberDesc& x, mpfr_prec_t precision = 128);

struct MatveevInstance {
  unsigned t = 1;
  unsigned D = 1;
  Int B = 3;
  std::vector<Interval> A;
};

/// C = 1.4 30^{t+3} t^{4.5} D^2 (1 + ln D) prod A_i, so that a nonzero
/// linear form satisfies |Lambda| > exp(-C (1 + ln B)).
Interval matveev_coefficient(const MatveevInstance& inst, mpfr_prec_t precision = 128);

/// x c1 - c2 < C (1 + ln x)^k.
struct BoundChainShape {
  Interval c1;
  Interval c2;
  Interval C;
  unsigned k = 1;
};

struct BoundChainResult {
  /// Least integer such that the inequality fails for every x >= x0.
  Int x0;
  /// Whether the inequality can hold at x0 - 1 (false only when x0 = 1).
  bool holds_below = false;
};

BoundChainResult bound_chain_solve(const BoundChainShape& shape);

struct LambdaResidual {
  /// Enclosure of |eta_1^b_1 ... eta_t^b_t - 1|.
  Interval abs_value{64};
  bool exact_zero = false;
  mpfr_prec_t precision = 0;
};

/// Raises the precision from `precision` by doubling until the enclosure
/// excludes zero; throws PrecisionCapReached past `cap` bits. Products of
/// rationals with moderate exponents are evaluated exactly.
LambdaResidual lambda_residual(const std::vector<AlgebraicNumberDesc>& etas, const std::vector<Int>& bs,
                               mpfr_prec_t precision = 64, mpfr_prec_t cap = 16384);

struct GoldenConstant {
  std::string name;
  std::string description;
  std::string reference_value;
  Interval computed{128};
  /// The computed value must lie in [floor_ratio * reference, reference].
  double floor_ratio = 0.95;
  /// Set for the integer bounds, which are exact.
  std::optional<Int> exact;

  bool within() const;
  nlohmann::json to_json() const;
};

/// The chain of constants behind the bound on the index of a Lucas number
/// whose totient is a repdigit, recomputed from scratch.
std::vector<GoldenConstant> golden_constants();

}  // namespace lucastk
