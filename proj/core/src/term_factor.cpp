#include "lucastk/term_factor.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "lucastk/primes.hpp"

namespace lucastk {

namespace {

int moebius(long long n) {
  int mu = 1;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

std::vector<long long> small_divisors(long long n) {
  std::vector<long long> low, high;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

// keyed by effort as well
using CacheKey = std::tuple<long, long, long long, std::uint64_t, std::uint64_t>;

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<CacheKey, Factorization>& cache() {
  static std::map<CacheKey, Factorization> c;
  return c;
}

void strip(Int& rest, std::uint64_t p, std::map<Int, unsigned>& primes) {
  if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) return;
  unsigned e = 0;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    ++e;
  }
  primes[from_u64(p)] += e;
}

Factorization compute_part(const LucasPair& pair, long long d, const Effort& effort) {
  const Int value = abs(primitive_part(pair, d));
  if (value == 0) throw InvalidArgument("degenerate primitive part");
  std::map<Int, unsigned> primes;
  Int rest = value;

  for (const auto& [p, e] : factor_u64(static_cast<std::uint64_t>(d))) strip(rest, p, primes);
  Int delta = abs(pair.discriminant());
  if (fits_u64(delta)) {
    for (const auto& [p, e] : factor_u64(to_u64(delta))) strip(rest, p, primes);
  }
  const std::uint64_t generic_limit = std::min<std::uint64_t>(effort.trial_limit, 100'000);
  for (std::uint32_t p : small_primes()) {
    if (p > generic_limit || rest == 1) break;
    strip(rest, p, primes);
  }
  // Remaining primes are +-1 mod d: scan k d +- 1 a little further.
  if (rest > 1 && d > 2) {
    const std::uint64_t dd = static_cast<std::uint64_t>(d);
    const std::uint64_t candidates = 1u << 16;
    for (std::uint64_t k = 1; k <= candidates && rest > 1; ++k) {
      std::uint64_t lo = k * dd - 1, hi = k * dd + 1;
      for (std::uint64_t c : {lo, hi}) {
        if (c > generic_limit && mpz_divisible_ui_p(rest.get_mpz_t(), c) && is_prime_u64(c)) strip(rest, c, primes);
      }
    }
  }
  std::vector<Int> cofactors;
  std::uint64_t floor = 1;
  if (rest > 1) {
    Effort rho_only = effort;
    rho_only.trial_limit = 0;
    auto tail = factor_partial(rest, rho_only);
    for (const auto& pp : tail.factors()) primes[pp.prime] += pp.exponent;
    cofactors = tail.cofactors();
    // Every unknown prime exceeds the generic trial bound.
    floor = generic_limit;
  }
  std::vector<PrimePower> factors;
  for (const auto& [p, e] : primes) factors.push_back({p, e});
  std::sort(cofactors.begin(), cofactors.end());
  return Factorization::trusted(value, std::move(factors), std::move(cofactors), cofactors.empty() ? 1 : floor);
}

}  // namespace

Int primitive_part(const LucasPair& pair, long long d) {
  if (d < 1) throw InvalidArgument("primitive part needs d >= 1");
  Int num = 1, den = 1;
  for (long long e : small_divisors(d)) {
    int mu = moebius(d / e);
    if (mu == 0) continue;
    Int u = term(pair, e).u;
    if (mu > 0) {
      num *= u;
    } else {
      den *= u;
    }
  }
  Int q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Factorization factor_primitive_part(const LucasPair& pair, long long d, const Effort& effort) {
  CacheKey key{pair.r(), pair.s(), d, effort.rho_iterations, effort.trial_limit};
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache().find(key);
    if (it != cache().end()) return it->second;
  }
  Factorization f = compute_part(pair, d, effort);
  std::lock_guard<std::mutex> lock(cache_mutex());
  cache().emplace(key, f);
  return f;
}

Factorization factor_term(const LucasPair& pair, long long n, Side side, const Effort& effort) {
  if (side == Side::fundamental) {
    if (n < 1) throw InvalidArgument("u_n factorization needs n >= 1");
  } else if (n < 0) {
    throw InvalidArgument("v_n factorization needs n >= 0");
  }
  if (side == Side::companion && n == 0) return factor(2);
  std::vector<Factorization> parts;
  if (side == Side::fundamental) {
    for (long long d : small_divisors(n)) {
      if (d >= 2) parts.push_back(factor_primitive_part(pair, d, effort));
    }
  } else {
    for (long long d : small_divisors(2 * n)) {
      if (n % d != 0) parts.push_back(factor_primitive_part(pair, d, effort));
    }
  }
  Factorization whole = combine(parts);
  const Int expected = abs(term(pair, n).on(side));
  if (whole.n() != expected) throw Error("primitive parts do not multiply to the term");
  return whole;
}

}  // namespace lucastk
