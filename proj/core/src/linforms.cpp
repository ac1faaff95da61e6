#include "lucastk/linforms.hpp"

#include <cmath>
#include <optional>

namespace lucastk {

AlgebraicNumberDesc AlgebraicNumberDesc::rational(const Int& p, const Int& q) {
  if (sgn(q) == 0) throw InvalidArgument("zero denominator");
  AlgebraicNumberDesc x;
  x.kind_ = Kind::rational;
  x.rational_ = Rational(p, q);
  x.rational_.canonicalize();
  return x;
}

AlgebraicNumberDesc AlgebraicNumberDesc::quadratic(const Int& a0, const Int& b, const Int& c, bool larger_root) {
  if (sgn(a0) == 0) throw InvalidArgument("quadratic needs a nonzero leading coefficient");
  Int disc = b * b - 4 * a0 * c;
  if (sgn(disc) < 0) throw InvalidArgument("quadratic has no real roots");
  if (is_square(disc)) throw DegenerateQuadratic("discriminant " + to_dec(disc) + " is a perfect square");
  Int g;
  mpz_gcd(g.get_mpz_t(), a0.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (sgn(a0) < 0) g = -g;
  AlgebraicNumberDesc x;
  x.kind_ = Kind::quadratic;
  x.a0_ = a0 / g;
  x.b_ = b / g;
  x.c_ = c / g;
  x.larger_root_ = larger_root;
  return x;
}

AlgebraicNumberDesc AlgebraicNumberDesc::dominant_root(const LucasPair& pair) {
  return quadratic(1, -pair.r(), -pair.s(), pair.r() > 0);
}

std::vector<Interval> AlgebraicNumberDesc::conjugates(mpfr_prec_t precision) const {
  if (kind_ == Kind::rational) return {Interval::from_rational(rational_, precision)};
  auto root = sqrt(Interval::from_int(b_ * b_ - 4 * a0_ * c_, precision));
  auto minus_b = Interval::from_int(-b_, precision);
  auto two_a = Interval::from_int(2 * a0_, precision);
  auto hi = (minus_b + root) / two_a;
  auto lo = (minus_b - root) / two_a;
  // a0 > 0 after normalization, so hi is the larger root.
  return larger_root_ ? std::vector<Interval>{hi, lo} : std::vector<Interval>{lo, hi};
}

Interval AlgebraicNumberDesc::value(mpfr_prec_t precision) const { return conjugates(precision).front(); }

Int AlgebraicNumberDesc::leading_coefficient() const {
  return kind_ == Kind::rational ? Int(rational_.get_den()) : a0_;
}

namespace {

Interval log_max_one(const Interval& x) {
  auto a = abs(x);
  auto one = Interval::from_long(1, x.precision());
  if (mpfr_cmp_ui(a.upper().get(), 1) <= 0) return Interval::from_long(0, x.precision());
  if (mpfr_cmp_ui(a.lower().get(), 1) >= 0) return log(a);
  // Straddles 1: ln max(|x|, 1) lies in [0, ln upper].
  return hull(Interval::from_long(0, x.precision()), log(hull(one, a)));
}

bool geq(const Interval& a, const Interval& b) { return mpfr_cmp(a.lower().get(), b.upper().get()) >= 0; }

}  // namespace

Interval log_height(const AlgebraicNumberDesc& x, mpfr_prec_t precision) {
  if (x.kind() == AlgebraicNumberDesc::Kind::rational) {
    const auto& r = x.as_rational();
    Int top = abs(Int(r.get_num()));
    Int bottom = r.get_den();
    Int m = top > bottom ? top : bottom;
    return log(Interval::from_int(m, precision));
  }
  auto sum = log(Interval::from_int(x.leading_coefficient(), precision));
  for (const auto& c : x.conjugates(precision)) sum = sum + log_max_one(c);
  return sum / Interval::from_long(2, precision);
}

Interval matveev_coefficient(const MatveevInstance& inst, mpfr_prec_t precision) {
  if (inst.t < 1 || inst.D < 1) throw InvalidArgument("Matveev instance needs t >= 1 and D >= 1");
  if (inst.A.size() != inst.t) throw InvalidArgument("Matveev instance needs exactly t values A_i");
  auto floor_value = Interval::from_decimal("0.16", precision);
  for (const auto& a : inst.A) {
    if (a.certainly_less(floor_value)) throw InvalidArgument("every A_i must be at least 0.16");
  }
  auto t = Interval::from_long(inst.t, precision);
  auto d = Interval::from_long(inst.D, precision);
  auto one = Interval::from_long(1, precision);
  auto c = Interval::from_decimal("1.4", precision) * pow(Interval::from_long(30, precision), inst.t + 3) *
           pow(t, 4) * sqrt(t) * d * d * (one + log(d));
  for (const auto& a : inst.A) c = c * a;
  return c;
}

BoundChainResult bound_chain_solve(const BoundChainShape& shape) {
  if (!shape.c1.is_positive()) throw NoFiniteBound("the coefficient c1 must be positive");
  if (!shape.C.is_positive()) throw InvalidArgument("C must be positive");
  if (shape.k < 1 || shape.k > 12) throw InvalidArgument("bound chain supports 1 <= k <= 12");
  const unsigned k = shape.k;
  auto prec_for = [](const Int& x) { return static_cast<mpfr_prec_t>(std::max<std::size_t>(256, 2 * bit_length(x) + 128)); };
  auto sides = [&](const Int& x) {
    auto p = prec_for(x);
    auto xi = Interval::from_int(x, p);
    auto lhs = xi * shape.c1 - shape.c2;
    auto rhs = shape.C * pow(Interval::from_long(1, p) + log(xi), k);
    return std::pair{lhs, rhs};
  };
  auto fails = [&](const Int& x) {
    auto [lhs, rhs] = sides(x);
    return geq(lhs, rhs);
  };
  auto may_hold = [&](const Int& x) { return !fails(x); };
  auto increasing = [&](const Int& x) {
    auto p = prec_for(x);
    auto xi = Interval::from_int(x, p);
    auto slope = shape.C * Interval::from_long(k, p) * pow(Interval::from_long(1, p) + log(xi), k - 1) / xi;
    return shape.c1.certainly_greater(slope);
  };

  // On x >= e^k the left side minus the right side is convex.
  Int lo = static_cast<unsigned long>(std::ceil(std::exp(static_cast<double>(k)))) + 1;
  Int hi = lo;
  while (may_hold(hi) || !increasing(hi)) hi *= 2;

  std::optional<Int> last_holding;
  // Minimizer: least x in [lo, hi] where the difference is increasing.
  Int a = lo, b = hi;
  if (!increasing(a)) {
    while (b - a > 1) {
      Int mid = (a + b) / 2;
      (increasing(mid) ? b : a) = mid;
    }
    a = b;
  }
  if (may_hold(a)) {
    Int l = a, h = hi;
    while (h - l > 1) {
      Int mid = (l + h) / 2;
      (may_hold(mid) ? l : h) = mid;
    }
    last_holding = l;
  } else {
    for (Int x = lo - 1; x >= 1; --x) {
      if (may_hold(x)) {
        last_holding = x;
        break;
      }
    }
  }
  BoundChainResult out;
  out.x0 = last_holding ? Int(*last_holding + 1) : Int(1);
  out.holds_below = last_holding.has_value();
  return out;
}

LambdaResidual lambda_residual(const std::vector<AlgebraicNumberDesc>& etas, const std::vector<Int>& bs,
                               mpfr_prec_t precision, mpfr_prec_t cap) {
  if (etas.size() != bs.size()) throw InvalidArgument("need one exponent per algebraic number");
  if (precision < 64) throw InvalidArgument("precision must be at least 64 bits");
  bool all_rational = true;
  for (std::size_t i = 0; i < etas.size(); ++i) {
    all_rational = all_rational && etas[i].kind() == AlgebraicNumberDesc::Kind::rational && abs(bs[i]) <= 100000;
  }
  for (const auto& eta : etas) {
    if (!eta.value(64).is_positive()) throw InvalidArgument("every eta must be positive");
  }
  LambdaResidual out;
  if (all_rational) {
    Rational product = 1;
    for (std::size_t i = 0; i < etas.size(); ++i) {
      const auto& q = etas[i].as_rational();
      unsigned long e = Int(abs(bs[i])).get_ui();
      Rational power(pow_int(q.get_num(), e), pow_int(q.get_den(), e));
      if (sgn(bs[i]) < 0) power = 1 / power;
      product *= power;
    }
    Rational lambda = product - 1;
    out.exact_zero = sgn(lambda) == 0;
    out.abs_value = Interval::from_rational(abs(lambda), precision);
    out.precision = precision;
    return out;
  }
  for (mpfr_prec_t p = precision; p <= cap; p *= 2) {
    auto sum = Interval::from_long(0, p);
    for (std::size_t i = 0; i < etas.size(); ++i) {
      sum = sum + Interval::from_int(bs[i], p) * log(etas[i].value(p));
    }
    auto lambda = exp(sum) - Interval::from_long(1, p);
    if (!lambda.contains_zero()) {
      out.abs_value = abs(lambda);
      out.precision = p;
      return out;
    }
  }
  throw PrecisionCapReached("cannot separate the linear form from zero within " + std::to_string(cap) + " bits");
}

bool GoldenConstant::within() const {
  auto reference = Interval::from_decimal(reference_value, computed.precision());
  auto floor_value = reference * Interval::from_decimal(std::to_string(floor_ratio), computed.precision());
  return geq(reference, computed) && geq(computed, floor_value);
}

nlohmann::json GoldenConstant::to_json() const {
  return {{"name", name},
          {"description", description},
          {"computed", exact ? to_dec(*exact) : computed.to_sci(6)},
          {"reference", reference_value},
          {"floor_ratio", std::to_string(floor_ratio)},
          {"within", within()}};
}

std::vector<GoldenConstant> golden_constants() {
  constexpr mpfr_prec_t p = 128;
  auto dec = [](const char* s) { return Interval::from_decimal(s, p); };
  auto num = [](long v) { return Interval::from_long(v, p); };
  const auto log_alpha = log(LucasPair::fibonacci().alpha(p));
  const auto ln2 = log(num(2)), ln9 = log(num(9)), ln10 = log(num(10));

  auto matveev3 = [&](Interval a1, Interval a2, Interval a3) {
    return matveev_coefficient({3, 2, 3, {a1, a2, a3}}, p);
  };
  std::vector<GoldenConstant> out;
  auto add = [&](std::string name, std::string description, std::string reference, Interval value, double ratio) {
    out.push_back({std::move(name), std::move(description), std::move(reference), std::move(value), ratio, std::nullopt});
  };

  auto c1 = matveev3(log_alpha, num(2) * ln10, num(2) * ln9);
  add("matveev_first_form", "C for t=3, D=2, A=(ln alpha, 2 ln 10, 2 ln 9)", "9.5e12", c1, 0.95);
  add("p_coefficient", "C / ln alpha, bounding p by this times (1 + ln n)", "2e13", c1 / log_alpha, 0.95);
  auto c2 = matveev3(log_alpha, num(2) * ln10, num(2));
  add("matveev_second_form_per_p", "C / p for A=(ln alpha, 2 ln 10, 2p)", "4.3e12", c2, 0.95);
  add("q_coefficient", "4.3e12 / ln alpha, bounding q by this times (1 + ln n) p", "9e12", dec("4.3e12") / log_alpha, 0.95);
  add("q_chain", "9e12 * 2e13, bounding q by this times (1 + ln n)^2", "2e26", dec("9e12") * dec("2e13"), 0.5);
  add("n_chain", "2e13 * 2e26, bounding n = pq by this times (1 + ln n)^2", "4e39", dec("2e13") * dec("2e26"), 0.95);
  auto n43 = bound_chain_solve({num(1), num(0), dec("4e39"), 2}).x0;
  add("n_bound_two_primes", "least n failing n < 4e39 (1 + ln n)^2", "5e43", Interval::from_int(n43, p), 0.5);
  out.back().exact = n43;
  auto c3 = matveev3(num(2) * ln9, num(2) * ln10, num(2) * log_alpha);
  add("matveev_p1_form", "C for A=(2 ln 9, 2 ln 10, 2 ln alpha)", "1.89e13", c3, 0.95);
  auto c4 = matveev_coefficient(
      {4, 2, 3, {num(2) * dec("1.9e13"), num(2) * (dec("1.8e26") + ln2), num(2) * (dec("1.8e39") + ln2), num(2) * log_alpha}},
      p);
  add("n_coefficient_three_primes", "t=4 constant over 2 ln alpha, bounding n by this times (1 + ln n)^7", "8e93",
      c4 / (num(2) * log_alpha), 0.5);
  auto n111 = bound_chain_solve({num(1), num(0), dec("8e93"), 7}).x0;
  add("n_bound_three_primes", "least n failing n < 8e93 (1 + ln n)^7", "1e111", Interval::from_int(n111, p), 0.5);
  out.back().exact = n111;
  return out;
}

}  // namespace lucastk
