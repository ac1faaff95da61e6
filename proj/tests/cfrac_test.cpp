#include <gtest/gtest.h>

#include <random>
#include <set>

#include "lucastk/cfrac.hpp"
#include "lucastk/lucas.hpp"

using namespace lucastk;

namespace {

Interval sqrt2(mpfr_prec_t prec) { return sqrt(Interval::from_long(2, prec)); }

std::vector<Int> ints(std::initializer_list<long> xs) {
  std::vector<Int> out;
  for (long x : xs) out.push_back(Int(x));
  return out;
}

Interval point(double x) { return Interval::from_decimal(std::to_string(x), 128); }

}  // namespace

TEST(Cfrac, RationalExpansion) {
  EXPECT_EQ(cf_expand(Rational(1, 4)).quotients, ints({0, 4}));
  EXPECT_EQ(cf_expand(Rational(7)).quotients, ints({7}));
  EXPECT_EQ(cf_expand(Rational(-7, 3)).quotients, ints({-3, 1, 2}));
  EXPECT_TRUE(cf_expand(Rational(355, 113)).terminated);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Rational x(Int(static_cast<long>(rng() % 100000)), Int(static_cast<long>(rng() % 1000 + 1)));
    x.canonicalize();
    auto cf = cf_expand(x);
    auto conv = convergents(cf);
    EXPECT_EQ(Rational(conv.back().p, conv.back().q), x);
    if (cf.quotients.size() > 1) EXPECT_GT(cf.quotients.back(), 1);
  }
}

TEST(Cfrac, IntervalExpansion) {
  auto golden = (Interval::from_long(1, 256) + sqrt(Interval::from_long(5, 256))) / Interval::from_long(2, 256);
  auto cf = cf_expand(golden, 1000);
  EXPECT_GT(cf.quotients.size(), 100u);
  EXPECT_LT(cf.quotients.size(), 1000u);
  for (const auto& a : cf.quotients) ASSERT_EQ(a, 1);

  auto r2 = cf_expand(sqrt2(512), 1000);
  EXPECT_EQ(r2.quotients[0], 1);
  for (std::size_t i = 1; i < r2.quotients.size(); ++i) ASSERT_EQ(r2.quotients[i], 2);

  // more precision only extends the certified prefix
  auto longer = cf_expand(sqrt2(2048), 5000);
  ASSERT_GT(longer.quotients.size(), r2.quotients.size());
  EXPECT_TRUE(std::equal(r2.quotients.begin(), r2.quotients.end(), longer.quotients.begin()));

  auto wide = Interval::from_bounds(point(2.5).lower(), point(3.5).upper());
  EXPECT_THROW(cf_expand(wide, 10), EnclosureTooWide);
}

TEST(Cfrac, Convergents) {
  auto fib = convergents(ints({1, 1, 1, 1, 1}));
  std::vector<std::pair<long, long>> want{{1, 1}, {2, 1}, {3, 2}, {5, 3}, {8, 5}};
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_EQ(fib[i].p, want[i].first);
    EXPECT_EQ(fib[i].q, want[i].second);
  }
  auto r2 = convergents(ints({1, 2, 2, 2}));
  EXPECT_EQ(r2[3].p, 17);
  EXPECT_EQ(r2[3].q, 12);
  auto zero = convergents(ints({0}));
  EXPECT_EQ(zero[0].p, 0);
  EXPECT_EQ(zero[0].q, 1);
}

TEST(Cfrac, DeterminantInvariant) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<Int> q{Int(static_cast<long>(rng() % 10))};
    std::size_t len = rng() % 30 + 1;
    for (std::size_t i = 0; i < len; ++i) q.push_back(Int(static_cast<long>(rng() % 1000 + 1)));
    auto c = convergents(q);
    for (std::size_t j = 1; j < c.size(); ++j) {
      Int det = c[j].p * c[j - 1].q - c[j - 1].p * c[j].q;
      ASSERT_EQ(det, j % 2 ? 1 : -1) << trial;
      ASSERT_GT(c[j].q, c[j - 1].q - (j == 1 ? 1 : 0));
    }
  }
}

TEST(Cfrac, LegendreDirection) {
  auto x = sqrt2(256);
  auto conv = convergents(cf_expand(x, 200));
  std::set<std::pair<Int, Int>> known;
  for (const auto& c : conv) known.insert({c.p, c.q});
  std::mt19937_64 rng(3);
  int found = 0;
  for (long s = 1; s <= 100000 && found < 100; ++s) {
    auto sx = x * Interval::from_long(s, 256);
    Int r = sx.floor_lower() + (Interval::from_long(1, 256) / Interval::from_long(2, 256) + sx).floor_lower() -
            sx.floor_lower();
    auto err = abs(x - Interval::from_rational(Rational(r, s), 256));
    auto bound = Interval::from_rational(Rational(1, 2 * Int(s) * s), 256);
    if (!err.certainly_less(bound)) continue;
    Rational red(r, s);
    red.canonicalize();
    EXPECT_TRUE(known.count({red.get_num(), red.get_den()})) << r << "/" << s;
    ++found;
  }
  EXPECT_GT(found, 10);
}

TEST(Cfrac, BestApproximation) {
  const double r2 = std::sqrt(2.0);
  auto conv = convergents(ints({1, 2, 2, 2, 2, 2, 2, 2, 2, 2}));
  for (std::size_t j = 0; j + 1 < conv.size(); ++j) {
    double best = std::fabs(conv[j].q.get_d() * r2 - conv[j].p.get_d());
    for (long s = 1; s < conv[j + 1].q.get_si(); ++s) {
      double r = std::round(s * r2);
      EXPECT_GE(std::fabs(s * r2 - r), best - 1e-12) << j << " " << s;
    }
  }
}

TEST(Cfrac, NearestIntDistance) {
  EXPECT_NEAR(nearest_int_distance(point(2.25)).approx(), 0.25, 1e-15);
  EXPECT_NEAR(nearest_int_distance(Interval::from_decimal("7.9", 128)).approx(), 0.1, 1e-15);
  EXPECT_NEAR(nearest_int_distance(Interval::from_decimal("2.5", 128)).approx(), 0.5, 1e-15);
  EXPECT_THROW(nearest_int_distance(Interval::from_bounds(point(2.4999).lower(), point(2.5001).upper())), AmbiguousHalfway);
  auto alpha = LucasPair::fibonacci().alpha(512);
  auto gamma = log(Interval::from_long(10, 512)) / log(alpha);
  auto d = nearest_int_distance(gamma * Interval::from_long(10, 512));
  EXPECT_TRUE(d.is_positive());
  EXPECT_TRUE(d.certainly_less(Interval::from_decimal("0.5", 512)));
}

TEST(Cfrac, GoldenInstance) {
  auto log_alpha = [](mpfr_prec_t p) { return log(LucasPair::fibonacci().alpha(p)); };
  ReductionInstance inst{
      [=](mpfr_prec_t p) { return log(Interval::from_long(10, p)) / log_alpha(p); },
      [=](mpfr_prec_t p) { return log(Interval::from_rational(Rational(8, 9), p)) / log_alpha(p); },
      decimal_real("30"),
      [](mpfr_prec_t p) { return LucasPair::fibonacci().alpha(p); },
      pow_int(10, 45)};
  auto out = baker_davenport_reduce(inst);
  EXPECT_GT(out.q, 6 * pow_int(10, 45));
  EXPECT_TRUE(out.epsilon.is_positive());
  EXPECT_LE(out.precision, 4096);
  EXPECT_EQ(out.q, Int("28441994168396717414915760181943986591132348222"));
  EXPECT_EQ(out.w_bound, 232);
  EXPECT_LT(out.w_bound, 250);
  EXPECT_TRUE(reduction_soundness_check(inst, out, 10000));
}

TEST(Cfrac, SmallInstanceAgainstBruteForce) {
  ReductionInstance inst{[](mpfr_prec_t p) { return sqrt2(p); }, decimal_real("0.3"), decimal_real("1"),
                         decimal_real("2"), 1};
  auto out = baker_davenport_reduce(inst);
  const double g = std::sqrt(2.0);
  for (int u = 0; u <= 1; ++u) {
    for (int v = -3; v <= 3; ++v) {
      double lhs = u * g - v + 0.3;
      if (lhs <= 0) continue;
      for (int w = static_cast<int>(out.w_bound.get_si()) + 1; w <= 64; ++w) EXPECT_FALSE(lhs < std::ldexp(1.0, -w));
    }
  }
  EXPECT_TRUE(reduction_soundness_check(inst, out, 1));
}

TEST(Cfrac, EngineeredRejection) {
  // mu sits just off 3 gamma mod 1, so eps is negative until q * 1e-6 dominates
  ReductionInstance inst{[](mpfr_prec_t p) { return sqrt2(p); },
                         [](mpfr_prec_t p) {
                           return Interval::from_long(3, p) * sqrt2(p) - Interval::from_long(4, p) +
                                  Interval::from_decimal("0.000001", p);
                         },
                         decimal_real("1"), decimal_real("2"), 10};
  auto out = baker_davenport_reduce(inst);
  EXPECT_FALSE(out.attempts.empty());
  EXPECT_GT(out.convergent_index, out.attempts.front().index);
  EXPECT_TRUE(out.epsilon.is_positive());
  EXPECT_TRUE(reduction_soundness_check(inst, out, 10));
}

TEST(Cfrac, RandomSoundness) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    long a = static_cast<long>(rng() % 50 + 2);
    if (is_square(Int(a))) continue;
    std::string mu = "0." + std::to_string(rng() % 9000 + 1000);
    long M = static_cast<long>(rng() % 500 + 1);
    ReductionInstance inst{[a](mpfr_prec_t p) { return sqrt(Interval::from_long(a, p)); }, decimal_real(mu),
                           decimal_real("5"), decimal_real("3"), Int(M)};
    auto out = baker_davenport_reduce(inst);
    EXPECT_TRUE(reduction_soundness_check(inst, out, M)) << a << " " << mu << " " << M;
  }
}
