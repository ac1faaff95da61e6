#include <gtest/gtest.h>

#include <map>

#include "lucastk/lucas.hpp"

using namespace lucastk;

namespace {

// u and v by the plain recurrence
std::pair<std::vector<Int>, std::vector<Int>> naive_terms(long r, long s, int count) {
  std::vector<Int> u{0, 1}, v{2, Int(r)};
  for (int n = 2; n < count; ++n) {
    u.push_back(r * u[n - 1] + s * u[n - 2]);
    v.push_back(r * v[n - 1] + s * v[n - 2]);
  }
  return {u, v};
}

std::uint64_t naive_period(long r, long s, std::uint64_t m) {
  auto mod = [m](long long x) { return static_cast<std::uint64_t>(((x % static_cast<long long>(m)) + static_cast<long long>(m)) % static_cast<long long>(m)); };
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> seen;
  std::uint64_t a = 0, b = 1 % m;
  for (std::uint64_t n = 0;; ++n) {
    auto [it, fresh] = seen.emplace(std::make_pair(a, b), n);
    if (!fresh) return n - it->second;
    std::uint64_t next = mod(r * static_cast<long long>(b) + s * static_cast<long long>(a));
    a = b;
    b = next;
  }
}

}  // namespace

TEST(Lucas, PairValidation) {
  EXPECT_THROW(LucasPair(2, 2), InvalidArgument);   // gcd
  EXPECT_THROW(LucasPair(0, 1), InvalidArgument);
  EXPECT_THROW(LucasPair(1, -1), InvalidArgument);  // negative discriminant
  EXPECT_THROW(LucasPair(2, -1), InvalidArgument);  // zero discriminant
  EXPECT_EQ(LucasPair::repunit(10), LucasPair(11, -10));
  EXPECT_EQ(LucasPair::pell().discriminant(), 8);
}

TEST(Lucas, ParsePairNames) {
  EXPECT_EQ(parse_pair("lucas").side, Side::companion);
  EXPECT_EQ(parse_pair("pell-lucas").pair, LucasPair::pell());
  EXPECT_EQ(parse_pair("custom:3,-2").pair, LucasPair(3, -2));
  EXPECT_THROW(parse_pair("tribonacci"), InvalidArgument);
  EXPECT_THROW(parse_pair("custom:3"), InvalidArgument);
}

TEST(Lucas, DoublingMatchesRecurrence) {
  for (auto [r, s] : std::vector<std::pair<long, long>>{{1, 1}, {2, 1}, {3, -2}, {11, -10}, {5, 3}, {-1, 1}}) {
    auto [u, v] = naive_terms(r, s, 300);
    LucasPair pair(r, s);
    for (long long n = 0; n < 300; ++n) {
      auto t = term(pair, n);
      ASSERT_EQ(t.u, u[n]) << r << "," << s << " n=" << n;
      ASSERT_EQ(t.v, v[n]) << r << "," << s << " n=" << n;
    }
    auto block = terms_upto(pair, 300);
    for (long long n = 0; n < 300; ++n) ASSERT_EQ(block[n].u, u[n]);
  }
}

TEST(Lucas, KnownValues) {
  EXPECT_EQ(term(LucasPair::pell(), 21).u, 38613965);
  EXPECT_EQ(term(LucasPair::pell(), 21).v, 109216786);
  EXPECT_EQ(term(LucasPair::fibonacci(), 100).u, Int("354224848179261915075"));
  EXPECT_EQ(term(LucasPair::repunit(10), 7).u, 1111111);
}

TEST(Lucas, NegativeIndices) {
  auto fib = LucasPair::fibonacci();
  for (long long n = 1; n <= 50; ++n) {
    auto neg = term(fib, -n), pos = term(fib, n);
    ASSERT_EQ(neg.u, n % 2 ? pos.u : Int(-pos.u));
    ASSERT_EQ(neg.v, n % 2 ? Int(-pos.v) : pos.v);
  }
  EXPECT_THROW(term(LucasPair(3, -2), -1), InvalidArgument);
  EXPECT_THROW(term(fib, 20'000'000), IndexGuardExceeded);
}

TEST(Lucas, TermModMatchesExact) {
  auto pell = LucasPair::pell();
  for (std::uint64_t n : {0ULL, 1ULL, 7ULL, 100ULL, 1000ULL}) {
    auto t = term(pell, static_cast<long long>(n));
    for (std::uint64_t m : {2ULL, 97ULL, 1000003ULL}) {
      auto [a, b] = term_mod_u64(pell, n, m);
      ASSERT_EQ(a, Int(t.u % from_u64(m)).get_ui());
      ASSERT_EQ(b, Int(t.v % from_u64(m)).get_ui());
      auto [c, d] = term_mod(pell, from_u64(n), from_u64(m));
      ASSERT_EQ(c, a);
      ASSERT_EQ(d, b);
    }
  }
  EXPECT_THROW(term_mod_u64(pell, 5, 0), InvalidModulus);
}

TEST(Lucas, PeriodMatchesStateScan) {
  for (auto [r, s] : std::vector<std::pair<long, long>>{{1, 1}, {2, 1}, {3, -2}, {5, 3}}) {
    LucasPair pair(r, s);
    for (std::uint64_t m = 1; m <= 120; ++m) {
      auto info = period_mod(pair, m);
      ASSERT_EQ(info.period, naive_period(r, s, m)) << r << "," << s << " mod " << m;
    }
  }
  EXPECT_EQ(period_mod(LucasPair::fibonacci(), 10).period, 60u);
  EXPECT_THROW(period_mod(LucasPair::fibonacci(), 2'000'000), ModulusGuardExceeded);
  EXPECT_THROW(period_mod(LucasPair::fibonacci(), 0), InvalidModulus);
}

TEST(Lucas, PellResidueCycles) {
  auto pell = LucasPair::pell();
  auto c16 = period_mod(pell, 16);
  EXPECT_EQ(c16.u_cycle, (std::vector<std::uint64_t>{0, 1, 2, 5, 12, 13, 6, 9, 8, 9, 10, 13, 4, 5, 14, 1}));
  EXPECT_EQ(period_mod(pell, 5).period, 12u);
  EXPECT_EQ(period_mod(pell, 3).period, 8u);
  EXPECT_EQ(period_mod(pell, 7).period, 6u);
  // the state period mod 8 is 8 but v alone repeats after 4
  auto c8 = period_mod(pell, 8);
  EXPECT_EQ(c8.v_cycle, (std::vector<std::uint64_t>{2, 2, 6, 6, 2, 2, 6, 6}));
  EXPECT_EQ(c8.at(Side::companion, 1001), 2u);
}

TEST(Lucas, Membership) {
  auto pell = LucasPair::pell();
  EXPECT_EQ(is_member(pell, Int(38613965)), 21);
  EXPECT_EQ(is_member(pell, Int(1)), 1);
  EXPECT_FALSE(is_member(pell, Int(38613966)));
  EXPECT_EQ(is_member(pell, Int(2), Side::companion), 0);
  EXPECT_EQ(is_member(LucasPair::fibonacci(), Int(18), Side::companion), 6);
  EXPECT_FALSE(is_member(LucasPair::fibonacci(), Int(-3)));
}

TEST(Lucas, IdentitySuites) {
  for (const auto& pair : {LucasPair::pell(), LucasPair::fibonacci(), LucasPair(3, -2)}) {
    auto report = identity_suite(pair, 200);
    for (const auto& r : report.results) EXPECT_TRUE(r.passed) << r.name << ": " << r.counterexample;
  }
}
