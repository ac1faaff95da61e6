#include "lucastk/primes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lucastk/bigint.hpp"
#include "lucastk/errors.hpp"

namespace lucastk {

SieveTable::SieveTable(std::uint32_t limit) : limit_(limit), spf_(static_cast<std::size_t>(limit) + 1, 0) {
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      primes_.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes_) {
      std::uint64_t ip = i * p;
      if (p > spf_[i] || ip > limit) break;
      spf_[ip] = p;
    }
  }
}

bool SieveTable::is_prime(std::uint64_t n) const {
  if (n > limit_) throw InvalidArgument("SieveTable::is_prime beyond table limit");
  return n >= 2 && spf_[n] == n;
}

std::vector<std::pair<std::uint64_t, unsigned>> SieveTable::factor(std::uint64_t n) const {
  if (n > limit_) throw InvalidArgument("SieveTable::factor beyond table limit");
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  while (n > 1) {
    std::uint32_t p = spf_[n];
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  return out;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  if (limit < 2) return {};
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  std::vector<std::uint32_t> out;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> table = primes_up_to(1u << 20);
  return table;
}

std::uint64_t nth_prime_upper_bound(std::uint64_t n) {
  if (n < 6) return 13;
  double x = static_cast<double>(n);
  return static_cast<std::uint64_t>(x * (std::log(x) + std::log(std::log(x)))) + 1;
}

std::vector<std::uint64_t> first_primes(std::size_t count) {
  std::vector<std::uint64_t> out;
  if (count == 0) return out;
  std::uint64_t bound = nth_prime_upper_bound(count);
  out = primes_in_range(2, bound);
  out.resize(count);
  return out;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < 2 || hi < lo) return out;
  lo = std::max<std::uint64_t>(lo, 2);
  auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(hi))) + 2;
  while (root * root > hi) --root;
  std::vector<std::uint32_t> base = primes_up_to(static_cast<std::uint32_t>(root + 1));
  constexpr std::uint64_t kSegment = 1u << 18;
  std::vector<char> composite;
  for (std::uint64_t seg_lo = lo; seg_lo <= hi; seg_lo += kSegment) {
    std::uint64_t seg_hi = std::min(hi, seg_lo + kSegment - 1);
    composite.assign(seg_hi - seg_lo + 1, 0);
    for (std::uint32_t p : base) {
      std::uint64_t pp = static_cast<std::uint64_t>(p) * p;
      if (pp > seg_hi) break;
      std::uint64_t start = std::max(pp, (seg_lo + p - 1) / p * p);
      for (std::uint64_t j = start; j <= seg_hi; j += p) composite[j - seg_lo] = 1;
    }
    for (std::uint64_t v = seg_lo; v <= seg_hi; ++v) {
      if (!composite[v - seg_lo]) out.push_back(v);
    }
    if (seg_hi == hi) break;
  }
  return out;
}

namespace {

/// Montgomery arithmetic modulo an odd 64-bit n.
class Montgomery64 {
 public:
  explicit Montgomery64(std::uint64_t n) : n_(n), inv_(n) {
    for (int i = 0; i < 6; ++i) inv_ *= 2 - n * inv_;
    r2_ = static_cast<std::uint64_t>((static_cast<u128>(1) << 64) % n);
    r2_ = mulmod_u64(r2_, r2_, n);
  }
  std::uint64_t reduce(u128 t) const {
    auto hi = static_cast<std::uint64_t>(t >> 64);
    auto m = static_cast<std::uint64_t>(t) * inv_;
    auto mh = static_cast<std::uint64_t>((static_cast<u128>(m) * n_) >> 64);
    std::uint64_t r = hi - mh;
    return hi < mh ? r + n_ : r;
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return reduce(static_cast<u128>(a) * b);
  }
  std::uint64_t to(std::uint64_t a) const { return mul(a % n_, r2_); }
  std::uint64_t from(std::uint64_t a) const { return reduce(a); }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return (s < a || s >= n_) ? s - n_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + n_ - b; }
  std::uint64_t one() const { return to(1); }

 private:
  std::uint64_t n_;
  std::uint64_t inv_;
  std::uint64_t r2_;
};

bool strong_probable_prime(std::uint64_t n, std::uint64_t base, const Montgomery64& mont) {
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  std::uint64_t one = mont.one();
  std::uint64_t minus_one = mont.sub(0, one);
  std::uint64_t x = one;
  std::uint64_t b = mont.to(base);
  for (std::uint64_t e = d; e > 0; e >>= 1) {
    if (e & 1) x = mont.mul(x, b);
    b = mont.mul(b, b);
  }
  if (x == one || x == minus_one) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = mont.mul(x, x);
    if (x == minus_one) return true;
    if (x == one) return false;
  }
  return false;
}

/// Brent's variant of Pollard rho with batched gcds. Returns a nontrivial
/// factor of the odd composite n.
std::uint64_t rho_u64(std::uint64_t n) {
  Montgomery64 mont(n);
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t cm = mont.to(c);
    auto f = [&](std::uint64_t x) { return mont.add(mont.mul(x, x), cm); };
    std::uint64_t y = mont.to(2), x = y, ys = y, q = mont.one(), g = 1;
    constexpr std::uint64_t kBatch = 128;
    for (std::uint64_t r = 1; g == 1; r <<= 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
          y = f(y);
          q = mont.mul(q, x > y ? x - y : y - x);
        }
        g = gcd_u64(mont.from(q), n);
      }
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd_u64(mont.from(x > ys ? x - ys : ys - x), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  std::uint64_t d = rho_u64(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kSmall) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;
  Montgomery64 mont(n);
  for (std::uint64_t a : kSmall) {
    if (!strong_probable_prime(n, a, mont)) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("factor_u64(0)");
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  for (std::uint64_t p = 17; p < 1000 && p * p <= n; p += 2) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p : primes) {
    if (!out.empty() && out.back().first == p) {
      ++out.back().second;
    } else {
      out.emplace_back(p, 1);
    }
  }
  return out;
}

}  // namespace lucastk
