#include <gtest/gtest.h>

#include <random>

#include "lucastk/arith.hpp"
#include "lucastk/primes.hpp"

using namespace lucastk;

namespace {

bool naive_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> naive_factor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

Int product(const Factorization& f) {
  Int x = 1;
  for (const auto& pp : f.factors()) x *= pow_int(pp.prime, pp.exponent);
  for (const auto& c : f.cofactors()) x *= c;
  return x;
}

}  // namespace

TEST(Primes, SieveMatchesTrialDivision) {
  SieveTable table(20000);
  for (std::uint64_t n = 0; n <= 20000; ++n) {
    ASSERT_EQ(table.is_prime(n), naive_prime(n)) << n;
    if (n >= 2) ASSERT_EQ(table.factor(n), naive_factor(n)) << n;
  }
}

TEST(Primes, SegmentedRangeMatchesSieve) {
  auto all = primes_up_to(200000);
  auto seg = primes_in_range(150000, 200000);
  std::vector<std::uint64_t> expect;
  for (auto p : all)
    if (p >= 150000) expect.push_back(p);
  EXPECT_EQ(seg, expect);
  EXPECT_EQ(first_primes(10000).back(), 104729u);
}

TEST(Primes, NthPrimeUpperBound) {
  auto ps = first_primes(5000);
  for (std::size_t n = 6; n <= ps.size(); ++n) ASSERT_LT(ps[n - 1], nth_prime_upper_bound(n)) << n;
}

TEST(Primes, FactorU64MatchesNaive) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    std::uint64_t n = rng() % 1000000000000ULL + 2;
    ASSERT_EQ(factor_u64(n), naive_factor(n)) << n;
  }
  // semiprimes with two 31-bit factors exercise rho
  std::uint64_t p = 2147483647ULL, q = 2147483629ULL;
  EXPECT_EQ(factor_u64(p * q), (std::vector<std::pair<std::uint64_t, unsigned>>{{q, 1}, {p, 1}}));
}

TEST(Factor, ProbablePrimeAgreesWithTrialDivision) {
  for (std::uint64_t n = 0; n < 30000; ++n) ASSERT_EQ(is_probable_prime(from_u64(n)), naive_prime(n)) << n;
  for (long c : {561L, 1105L, 1729L, 2465L, 2821L, 6601L, 8911L}) EXPECT_FALSE(is_probable_prime(Int(c)));
  EXPECT_TRUE(is_probable_prime(Int("170141183460469231731687303715884105727")));
  EXPECT_FALSE(is_probable_prime(Int("170141183460469231731687303715884105729")));
  // strong pseudoprime to the first 12 prime bases
  EXPECT_FALSE(is_probable_prime(Int("318665857834031151167461")));
}

TEST(Factor, FiveToSixteenMinusOne) {
  auto f = factor(Int(pow_int(Int(5), 16) - 1));
  std::vector<Int> support;
  for (const auto& pp : f.factors()) support.push_back(pp.prime);
  EXPECT_EQ(support, (std::vector<Int>{2, 3, 13, 17, 313, 11489}));
  EXPECT_EQ(product(f), pow_int(Int(5), 16) - 1);
}

TEST(Factor, RandomProductsReassemble) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 60; ++i) {
    Int n = 1;
    int k = 2 + static_cast<int>(rng() % 4);
    for (int j = 0; j < k; ++j) n *= from_u64(rng() % 100000000ULL + 2);
    auto f = factor(n);
    ASSERT_TRUE(f.complete());
    ASSERT_EQ(product(f), n);
    for (const auto& pp : f.factors()) ASSERT_TRUE(is_probable_prime(pp.prime));
  }
}

TEST(Factor, PartialResultKeepsInvariants) {
  // two 30-digit primes: rho cannot split this on a tiny budget
  Int p("1000000000000000000000000000057"), q("1000000000000000000000000000099");
  ASSERT_TRUE(is_probable_prime(p) && is_probable_prime(q));
  Int n = p * q * 12;
  auto f = factor_partial(n, Effort{1000, 1000});
  EXPECT_FALSE(f.complete());
  EXPECT_EQ(product(f), n);
  EXPECT_EQ(f.cofactors(), std::vector<Int>{p * q});
  EXPECT_GE(f.cofactor_floor(), 997u);
  EXPECT_THROW(f.require_complete(), IncompleteFactorization);
  EXPECT_THROW(factor(n, Effort{1000, 1000}), EffortExceeded);
}

TEST(Factor, JsonRoundTrip) {
  auto f = factor(Int(360));
  auto j = f.to_json();
  EXPECT_EQ(j["n"], "360");
  EXPECT_EQ(Factorization::from_json(j), f);
}

TEST(Factor, ConstructorRejectsBadInput) {
  EXPECT_THROW(Factorization(Int(12), {{2, 2}, {3, 2}}), InvalidArgument);
  EXPECT_THROW(Factorization(Int(12), {{3, 1}, {2, 2}}), InvalidArgument);
  EXPECT_THROW(Factorization(Int(8), {{4, 1}, {2, 1}}), InvalidArgument);
}

TEST(Factor, CombineMergesExponents) {
  auto f = combine({factor(Int(12)), factor(Int(18))});
  EXPECT_EQ(f.n(), 216);
  EXPECT_EQ(f.factors(), (std::vector<PrimePower>{{2, 3}, {3, 3}}));
}
