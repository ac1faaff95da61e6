#include <gtest/gtest.h>

#include <numeric>

#include "lucastk/arith.hpp"

using namespace lucastk;

namespace {

long naive_phi(long n) {
  long c = 0;
  for (long k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++c;
  return c;
}

long naive_order(long a, long m) {
  long x = a % m;
  for (long k = 1; k <= m; ++k) {
    if (x == 1) return k;
    x = x * a % m;
  }
  return -1;
}

}  // namespace

TEST(Arith, PhiMatchesGcdCount) {
  for (long n = 1; n <= 2000; ++n) ASSERT_EQ(euler_phi(factor(Int(n))), naive_phi(n)) << n;
}

TEST(Arith, DivisorFunctionsMatchEnumeration) {
  for (long n = 1; n <= 1500; ++n) {
    long sigma = 0, tau = 0;
    std::vector<Int> ds;
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) {
        sigma += d;
        ++tau;
        ds.push_back(d);
      }
    auto f = factor(Int(n));
    auto df = divisor_functions(f);
    ASSERT_EQ(df.sigma, sigma);
    ASSERT_EQ(df.tau, tau);
    ASSERT_EQ(divisors(f), ds);
    unsigned big = 0;
    for (const auto& pp : f.factors()) big += pp.exponent;
    ASSERT_EQ(df.big_omega, big);
    ASSERT_EQ(df.omega, f.factors().size());
  }
}

TEST(Arith, LegendreMatchesEulerCriterion) {
  for (long p : {3L, 5L, 7L, 11L, 13L, 101L, 997L}) {
    for (long a = -20; a <= 60; ++a) {
      long r = ((a % p) + p) % p;
      int expect = 0;
      if (r != 0) {
        Int t;
        mpz_powm_ui(t.get_mpz_t(), Int(r).get_mpz_t(), static_cast<unsigned long>((p - 1) / 2), Int(p).get_mpz_t());
        expect = t == 1 ? 1 : -1;
      }
      ASSERT_EQ(legendre_symbol(Int(a), Int(p)), expect) << a << " " << p;
    }
  }
  EXPECT_THROW(legendre_symbol(Int(3), Int(9)), InvalidArgument);
}

TEST(Arith, Valuation) {
  EXPECT_EQ(valuation(Int(2), Int(96)), 5u);
  EXPECT_EQ(valuation(Int(13), Int(169)), 2u);
  EXPECT_EQ(valuation(Int(7), Int(10)), 0u);
}

TEST(Arith, MultiplicativeOrderMatchesScan) {
  for (long m = 2; m <= 300; ++m) {
    auto phi = factor(euler_phi(factor(Int(m))));
    for (long a = 1; a < m; ++a) {
      if (std::gcd(a, m) != 1) {
        ASSERT_THROW(multiplicative_order(Int(a), Int(m), phi), NotCoprime);
        continue;
      }
      ASSERT_EQ(multiplicative_order(Int(a), Int(m), phi), naive_order(a, m)) << a << " mod " << m;
    }
  }
}

TEST(Arith, NoLehmerNumbersBelowBound) {
  for (long n = 2; n <= 20000; ++n) {
    auto f = factor(Int(n));
    bool composite = !(f.factors().size() == 1 && f.factors()[0].exponent == 1);
    bool brute = composite && (n - 1) % naive_phi(n) == 0;
    ASSERT_FALSE(brute);
    ASSERT_EQ(lehmer_property(Int(n), f), brute) << n;
  }
}

TEST(Arith, LehmerRefutationWitnesses) {
  auto w = lehmer_refutation(Int(561), factor(Int(561)));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->kind, LehmerWitness::Kind::two_adic);
  w = lehmer_refutation(Int(15), factor(Int(15)));
  EXPECT_EQ(w->kind, LehmerWitness::Kind::prime_minus_one);
  EXPECT_EQ(w->prime, 5);
  w = lehmer_refutation(Int(45), factor(Int(45)));
  EXPECT_EQ(w->kind, LehmerWitness::Kind::square_factor);
  w = lehmer_refutation(Int(100), factor(Int(100)));
  EXPECT_EQ(w->kind, LehmerWitness::Kind::even);
  w = lehmer_refutation(Int(101), factor(Int(101)));
  EXPECT_EQ(w->kind, LehmerWitness::Kind::not_composite);

  Int p("1000000000000000000000000000577"), q("1000000000000000000000000001281");
  Factorization opaque(p * q, {}, {p * q}, 1000);
  w = lehmer_refutation(p * q, opaque);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->kind, LehmerWitness::Kind::fermat);
}

TEST(Arith, PhiEnclosureContainsExactValue) {
  Int p("1000000000000000000000000000057"), q("1000000000000000000000000000099");
  Int n = p * q * 3 * 3 * 7;
  Factorization partial(n, {{3, 2}, {7, 1}}, {p * q}, 1000);
  Int exact = Int(6) * 6 * (p - 1) * (q - 1);
  auto enc = phi_enclosure(partial);
  EXPECT_TRUE(enc.contains(exact));
  EXPECT_LE(phi_two_adic_lower_bound(partial), valuation(Int(2), exact));
  auto full = factor(Int(720720));
  EXPECT_EQ(phi_two_adic_lower_bound(full), valuation(Int(2), euler_phi(full)));
  EXPECT_TRUE(phi_enclosure(full).contains(euler_phi(full)));
}

TEST(Arith, TwoAdicBoundNeverExceedsTruth) {
  for (long n = 3; n <= 3000; ++n) {
    auto f = factor(Int(n));
    ASSERT_EQ(phi_two_adic_lower_bound(f), valuation(Int(2), euler_phi(f))) << n;
  }
}

TEST(Arith, RosserSchoenfeldBounds) {
  for (long n : {6L, 100L, 10000L, 1000000L}) EXPECT_TRUE(rs_bound_check(RsBound::prime_count, Int(n)).holds) << n;
  for (long x : {286L, 1000L, 100000L}) EXPECT_TRUE(rs_bound_check(RsBound::mertens_product, Int(x)).holds) << x;
  for (long n = 3; n <= 3000; ++n) ASSERT_TRUE(rs_bound_check(RsBound::phi_lower, Int(n)).holds) << n;
  for (long n = 26; n <= 3000; ++n) ASSERT_TRUE(rs_bound_check(RsBound::omega_upper, Int(n)).holds) << n;
  EXPECT_THROW(rs_bound_check(RsBound::prime_count, Int(5)), OutOfValidityRange);
  EXPECT_EQ(parse_rs_bound("phi_lower"), RsBound::phi_lower);
}
