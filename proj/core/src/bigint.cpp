#include "lucastk/bigint.hpp"

#include <cctype>
#include <string>

#include "lucastk/errors.hpp"

namespace lucastk {

std::string to_dec(const Int& x) { return x.get_str(10); }

std::string to_dec(const Rational& x) { return x.get_str(10); }

Int parse_int(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw InvalidArgument("not an integer: '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw InvalidArgument("not an integer: '" + s + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return Int(s, 10);
}

Int pow_int(const Int& base, unsigned long exponent) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Int isqrt(const Int& x) {
  if (sgn(x) < 0) throw InvalidArgument("isqrt of a negative number");
  Int r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

bool is_square(const Int& x) { return sgn(x) >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0; }

std::optional<PerfectPower> perfect_power(const Int& x) {
  Int a = abs(x);
  if (a <= 1) return PerfectPower{a, 2};
  if (mpz_perfect_power_p(a.get_mpz_t()) == 0) return std::nullopt;
  // Largest exponent first so the root is as small as possible.
  for (unsigned long k = bit_length(a); k >= 2; --k) {
    Int root;
    if (mpz_root(root.get_mpz_t(), a.get_mpz_t(), k) != 0) return PerfectPower{root, k};
  }
  return std::nullopt;
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exponent, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exponent > 0) {
    if (exponent & 1) result = mulmod_u64(result, base, m);
    base = mulmod_u64(base, base, m);
    exponent >>= 1;
  }
  return result;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace lucastk
