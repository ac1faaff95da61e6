#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace lucastk {

/// Smallest-prime-factor table over [0, limit].
class SieveTable {
 public:
  explicit SieveTable(std::uint32_t limit);

  std::uint32_t limit() const { return limit_; }
  const std::vector<std::uint32_t>& primes() const { return primes_; }
  bool is_prime(std::uint64_t n) const;
  /// Prime-power decomposition of n, n <= limit; ascending primes.
  std::vector<std::pair<std::uint64_t, unsigned>> factor(std::uint64_t n) const;

 private:
  std::uint32_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

/// Primes below 2^20, built once on first use and immutable afterwards.
const std::vector<std::uint32_t>& small_primes();

/// Upper bound for the n-th prime (n >= 1): n(ln n + ln ln n) for n >= 6.
std::uint64_t nth_prime_upper_bound(std::uint64_t n);

std::vector<std::uint64_t> first_primes(std::size_t count);

/// Primes in [lo, hi] in increasing order, via a segmented sieve.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

/// Trial-division factorization for 64-bit inputs using Pollard rho on
/// composite cofactors; ascending primes. Deterministic and always complete.
std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n);

bool is_prime_u64(std::uint64_t n);

}  // namespace lucastk
