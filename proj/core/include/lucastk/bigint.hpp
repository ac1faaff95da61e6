#pragma once

#include <gmpxx.h>

#include <climits>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace lucastk {

static_assert(sizeof(unsigned long) == 8, "lucastk assumes an LP64 platform");

__extension__ using u128 = unsigned __int128;

using Int = mpz_class;
using Rational = mpq_class;

std::string to_dec(const Int& x);
std::string to_dec(const Rational& x);

/// Parses an optionally signed decimal integer; throws InvalidArgument.
Int parse_int(std::string_view text);

Int pow_int(const Int& base, unsigned long exponent);
Int isqrt(const Int& x);
bool is_square(const Int& x);

struct PerfectPower {
  Int root;
  unsigned long exponent;
};

/// Largest exponent k >= 2 with |x| = y^k for a positive y, if any.
/// 0 and 1 are reported with exponent 2 (they are powers of every order).
std::optional<PerfectPower> perfect_power(const Int& x);

inline bool fits_u64(const Int& x) { return sgn(x) >= 0 && mpz_sizeinbase(x.get_mpz_t(), 2) <= 64; }
inline std::uint64_t to_u64(const Int& x) { return mpz_get_ui(x.get_mpz_t()); }
inline Int from_u64(std::uint64_t x) { return Int(static_cast<unsigned long>(x)); }
inline Int from_ll(long long x) { return Int(static_cast<long>(x)); }
inline std::size_t bit_length(const Int& x) {
  return sgn(x) == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
}

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exponent, std::uint64_t m);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

/// Reduces a signed value into [0, m).
inline std::uint64_t reduce_signed(long long x, std::uint64_t m) {
  long long r = static_cast<long long>(static_cast<unsigned long long>(x < 0 ? -(x + 1) : x) % m);
  if (x < 0) r = static_cast<long long>(m) - 1 - r;
  return static_cast<std::uint64_t>(r);
}

}  // namespace lucastk
