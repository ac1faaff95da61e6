#include "lucastk/lucas.hpp"

#include <cmath>
#include <numeric>
#include <unordered_map>

namespace lucastk {

std::string to_string(Side side) { return side == Side::fundamental ? "u" : "v"; }

Side parse_side(const std::string& text) {
  if (text == "u" || text == "fundamental") return Side::fundamental;
  if (text == "v" || text == "companion") return Side::companion;
  throw InvalidArgument("unknown side: " + text + " (expected u or v)");
}

LucasPair::LucasPair(long r, long s) : r_(r), s_(s) {
  if (r == 0) throw InvalidArgument("Lucas pair needs r != 0");
  if (s == 0) throw InvalidArgument("Lucas pair needs s != 0");
  if (std::gcd(r, s) != 1) throw InvalidArgument("Lucas pair needs gcd(r, s) = 1");
  if (sgn(discriminant()) <= 0) throw InvalidArgument("Lucas pair needs r^2 + 4s > 0");
}

LucasPair LucasPair::repunit(long base) {
  if (base < 2) throw InvalidArgument("repunit base must be at least 2");
  return LucasPair(base + 1, -base);
}

LucasPair::Family LucasPair::family() const {
  if (r_ == 1 && s_ == 1) return Family::fibonacci;
  if (r_ == 2 && s_ == 1) return Family::pell;
  return Family::custom;
}

Interval LucasPair::alpha(mpfr_prec_t precision) const {
  auto root = sqrt(Interval::from_int(discriminant(), precision));
  auto r = Interval::from_long(r_, precision);
  auto two = Interval::from_long(2, precision);
  return r_ > 0 ? (r + root) / two : (r - root) / two;
}

Interval LucasPair::beta(mpfr_prec_t precision) const {
  auto root = sqrt(Interval::from_int(discriminant(), precision));
  auto r = Interval::from_long(r_, precision);
  auto two = Interval::from_long(2, precision);
  return r_ > 0 ? (r - root) / two : (r + root) / two;
}

nlohmann::json LucasPair::to_json() const {
  return {{"r", std::to_string(r_)}, {"s", std::to_string(s_)}};
}

PairSpec parse_pair(const std::string& text) {
  if (text == "fibonacci") return {LucasPair::fibonacci(), Side::fundamental, text};
  if (text == "lucas") return {LucasPair::fibonacci(), Side::companion, text};
  if (text == "pell") return {LucasPair::pell(), Side::fundamental, text};
  if (text == "pell-lucas") return {LucasPair::pell(), Side::companion, text};
  const std::string prefix = "custom:";
  if (text.rfind(prefix, 0) == 0) {
    auto body = text.substr(prefix.size());
    auto comma = body.find(',');
    if (comma == std::string::npos) throw InvalidArgument("custom pair must look like custom:r,s");
    Int r = parse_int(body.substr(0, comma));
    Int s = parse_int(body.substr(comma + 1));
    if (!r.fits_slong_p() || !s.fits_slong_p()) throw InvalidArgument("custom pair parameters too large");
    return {LucasPair(r.get_si(), s.get_si()), Side::fundamental, text};
  }
  throw InvalidArgument("unknown pair: " + text);
}

namespace {

// Doubling on (u_k, u_{k+1}):
//   u_{2k}   = u_k (2 u_{k+1} - r u_k)
//   u_{2k+1} = u_{k+1}^2 + s u_k^2
// both follow from the addition law u_{m+n} = u_{m+1} u_n + s u_m u_{n-1}.
std::pair<Int, Int> u_window(const LucasPair& pair, unsigned long long k) {
  Int u = 0, u1 = 1, a, b;
  const long r = pair.r(), s = pair.s();
  for (int bit = 63; bit >= 0; --bit) {
    a = u * (2 * u1 - r * u);
    b = u1 * u1 + s * (u * u);
    if ((k >> bit) & 1ULL) {
      u = b;
      u1 = r * b + s * a;
    } else {
      u = std::move(a);
      u1 = std::move(b);
    }
  }
  return {u, u1};
}

}  // namespace

TermPair term(const LucasPair& pair, long long n, long long guard) {
  if (n > guard || n < -guard) {
    throw IndexGuardExceeded("index " + std::to_string(n) + " exceeds guard " + std::to_string(guard));
  }
  if (n < 0 && pair.s() != 1 && pair.s() != -1) {
    throw InvalidArgument("negative indices need |s| = 1");
  }
  unsigned long long k = n < 0 ? static_cast<unsigned long long>(-n) : static_cast<unsigned long long>(n);
  auto [u, u1] = u_window(pair, k);
  Int v = 2 * u1 - pair.r() * u;
  if (n < 0) {
    // (-s)^{-k} = (-s)^k when |s| = 1.
    bool negative = (-pair.s() == -1) && (k % 2 == 1);
    if (negative) v = -v;
    u = negative ? Int(u) : Int(-u);
  }
  return {n, std::move(u), std::move(v)};
}

std::vector<TermPair> terms_upto(const LucasPair& pair, std::size_t count) {
  std::vector<TermPair> out;
  out.reserve(count);
  Int u0 = 0, u1 = 1, v0 = 2, v1 = pair.r();
  for (std::size_t n = 0; n < count; ++n) {
    out.push_back({static_cast<long long>(n), u0, v0});
    Int u2 = pair.r() * u1 + pair.s() * u0;
    Int v2 = pair.r() * v1 + pair.s() * v0;
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  return out;
}

std::pair<Int, Int> term_mod(const LucasPair& pair, const Int& n, const Int& m) {
  if (m < 1) throw InvalidModulus("modulus must be at least 1");
  if (sgn(n) < 0) throw InvalidArgument("term_mod needs n >= 0");
  if (m == 1) return {0, 0};
  if (fits_u64(m) && fits_u64(n)) {
    auto [u, v] = term_mod_u64(pair, to_u64(n), to_u64(m));
    return {from_u64(u), from_u64(v)};
  }
  Int u = 0, u1 = 1, a, b;
  const long r = pair.r(), s = pair.s();
  auto reduce = [&](Int& x) {
    mpz_mod(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  };
  for (long bit = static_cast<long>(bit_length(n)) - 1; bit >= 0; --bit) {
    a = u * (2 * u1 - r * u);
    b = u1 * u1 + s * (u * u);
    reduce(a);
    reduce(b);
    if (mpz_tstbit(n.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) {
      u = b;
      u1 = r * b + s * a;
      reduce(u1);
    } else {
      u = std::move(a);
      u1 = std::move(b);
    }
  }
  Int v = 2 * u1 - r * u;
  reduce(v);
  return {u, v};
}

namespace {

struct ModU64 {
  std::uint64_t m;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>((static_cast<u128>(a) + b) % m);
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : static_cast<std::uint64_t>(static_cast<u128>(a) + m - b); }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return mulmod_u64(a, b, m); }
};

}  // namespace

std::pair<std::uint64_t, std::uint64_t> term_mod_u64(const LucasPair& pair, std::uint64_t n, std::uint64_t m) {
  if (m == 0) throw InvalidModulus("modulus must be at least 1");
  if (m == 1) return {0, 0};
  ModU64 z{m};
  const std::uint64_t r = reduce_signed(pair.r(), m), s = reduce_signed(pair.s(), m);
  std::uint64_t u = 0, u1 = 1 % m;
  for (int bit = 63; bit >= 0; --bit) {
    std::uint64_t a = z.mul(u, z.sub(z.add(u1, u1), z.mul(r, u)));
    std::uint64_t b = z.add(z.mul(u1, u1), z.mul(s, z.mul(u, u)));
    if ((n >> bit) & 1ULL) {
      u = b;
      u1 = z.add(z.mul(r, b), z.mul(s, a));
    } else {
      u = a;
      u1 = b;
    }
  }
  return {u, z.sub(z.add(u1, u1), z.mul(r, u))};
}

std::uint64_t PeriodInfo::at(Side side, std::uint64_t n) const {
  const auto& c = cycle(side);
  if (n >= preperiod) return c[(n - preperiod) % period];
  throw InvalidArgument("index inside the preperiod");
}

PeriodInfo period_mod(const LucasPair& pair, std::uint64_t m, std::uint64_t guard) {
  if (m < 1) throw InvalidModulus("modulus must be at least 1");
  if (m > guard) throw ModulusGuardExceeded("modulus " + std::to_string(m) + " exceeds guard " + std::to_string(guard));
  const std::uint64_t r = reduce_signed(pair.r(), m), s = reduce_signed(pair.s(), m);
  // State (u_n, u_{n+1}) packed as u_n * m + u_{n+1}; m <= 10^6 keeps it in 64 bits.
  auto step = [&](std::uint64_t state) {
    std::uint64_t u = state / m, u1 = state % m;
    return u1 * m + (r * u1 + s * u) % m;
  };
  const std::uint64_t start = 1 % m;
  const std::uint64_t cap = 100'000'000;

  // Brent: find the cycle length.
  std::uint64_t power = 1, lambda = 1, tortoise = start, hare = step(start);
  std::uint64_t steps = 1;
  while (tortoise != hare) {
    if (power == lambda) {
      tortoise = hare;
      power *= 2;
      lambda = 0;
    }
    hare = step(hare);
    ++lambda;
    if (++steps > cap) throw ModulusGuardExceeded("period search exceeded iteration cap");
  }
  std::uint64_t mu = 0;
  tortoise = hare = start;
  for (std::uint64_t i = 0; i < lambda; ++i) hare = step(hare);
  while (tortoise != hare) {
    tortoise = step(tortoise);
    hare = step(hare);
    ++mu;
  }

  PeriodInfo out;
  out.modulus = m;
  out.period = lambda;
  out.preperiod = mu;
  out.u_cycle.reserve(lambda);
  out.v_cycle.reserve(lambda);
  std::uint64_t state = tortoise;
  for (std::uint64_t i = 0; i < lambda; ++i) {
    std::uint64_t u = state / m, u1 = state % m;
    out.u_cycle.push_back(u);
    out.v_cycle.push_back((2 * u1 + (m - r) * u) % m);
    state = step(state);
  }
  return out;
}

namespace {

// Index beyond which |u_n| and |v_n| exceed |x| for good. Uses
// |alpha|^n - |beta|^n >= |alpha|^n / 2 once (|beta|/|alpha|)^n <= 1/2.
long long growth_cutoff(const LucasPair& pair, const Int& x) {
  double delta = pair.discriminant().get_d();
  double root = std::sqrt(delta);
  double a = (std::abs(static_cast<double>(pair.r())) + root) / 2;
  double b = std::abs((std::abs(static_cast<double>(pair.r())) - root) / 2);
  double ratio = b / a;
  double n1 = ratio <= 0 ? 0 : std::ceil(std::log(0.5) / std::log(ratio));
  double bits = static_cast<double>(bit_length(abs(x))) + 2 + std::log2(root);
  double n2 = std::ceil(bits / std::log2(a));
  return static_cast<long long>(std::max(n1, n2) * 1.001) + 3;
}

bool is_delta_times_square(const Int& value, const Int& delta) {
  if (sgn(value) < 0) return false;
  if (!mpz_divisible_p(value.get_mpz_t(), delta.get_mpz_t())) return false;
  return is_square(value / delta);
}

}  // namespace

std::optional<long long> is_member(const LucasPair& pair, const Int& x, Side side) {
  const Int delta = pair.discriminant();
  if (sgn(x) >= 0 && (pair.s() == 1 || pair.s() == -1)) {
    // v^2 - D u^2 = +-4 for every index.
    if (side == Side::fundamental) {
      Int base = delta * x * x;
      if (!is_square(base + 4) && !is_square(base - 4)) return std::nullopt;
    } else {
      Int sq = x * x;
      if (!is_delta_times_square(sq - 4, delta) && !is_delta_times_square(sq + 4, delta)) return std::nullopt;
    }
  }
  const long long cutoff = growth_cutoff(pair, x);
  Int a = side == Side::fundamental ? Int(0) : Int(2);
  Int b = side == Side::fundamental ? Int(1) : Int(pair.r());
  for (long long n = 0; n <= cutoff; ++n) {
    if (a == x) return n;
    Int c = pair.r() * b + pair.s() * a;
    a = std::move(b);
    b = std::move(c);
  }
  return std::nullopt;
}

bool IdentityReport::all_passed() const {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

nlohmann::json IdentityReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json item = {{"name", r.name}, {"checked", std::to_string(r.checked)}, {"passed", r.passed}};
    if (!r.passed) item["counterexample"] = r.counterexample;
    arr.push_back(item);
  }
  return {{"all_passed", all_passed()}, {"identities", arr}};
}

namespace {

class Checker {
 public:
  explicit Checker(std::string name) { result_.name = std::move(name); }
  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.checked;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.counterexample = describe();
    }
  }
  IdentityResult done() { return std::move(result_); }

 private:
  IdentityResult result_;
};

Int signed_power(long base, unsigned long exponent) { return pow_int(Int(base), exponent); }

unsigned nu2(const Int& x) { return static_cast<unsigned>(mpz_scan1(x.get_mpz_t(), 0)); }

// |alpha|^e for a possibly negative exponent e.
Interval alpha_power(const Interval& alpha, long long e) {
  auto p = pow(alpha, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return p;
  return Interval::from_long(1, alpha.precision()) / p;
}

bool at_most(const Interval& a, const Int& x) { return mpfr_cmp_z(a.upper().get(), x.get_mpz_t()) <= 0; }
bool at_least(const Interval& a, const Int& x) { return mpfr_cmp_z(a.lower().get(), x.get_mpz_t()) >= 0; }
bool above(const Interval& a, const Int& x) { return mpfr_cmp_z(a.lower().get(), x.get_mpz_t()) > 0; }

}  // namespace

IdentityReport identity_suite(const LucasPair& pair, long long n_max) {
  if (n_max < 0 || n_max > 2000) throw InvalidArgument("identity_suite needs 0 <= n_max <= 2000");
  const auto N = static_cast<std::size_t>(n_max);
  const auto t = terms_upto(pair, 2 * N + 2);
  const Int delta = pair.discriminant();
  const long r = pair.r(), s = pair.s();
  auto minus_s_pow = [&](std::size_t n) { return signed_power(-s, n); };
  auto idx = [](std::size_t n) { return std::to_string(n); };
  IdentityReport report;

  {
    Checker c("fast_doubling_matches_recurrence");
    for (std::size_t n = 0; n <= N; ++n) {
      auto tp = term(pair, static_cast<long long>(n));
      c.check(tp.u == t[n].u && tp.v == t[n].v, [&] { return "n=" + idx(n); });
    }
    report.results.push_back(c.done());
  }
  {
    Checker c("norm_v2_minus_delta_u2");
    for (std::size_t n = 0; n <= N; ++n) {
      c.check(t[n].v * t[n].v - delta * t[n].u * t[n].u == 4 * minus_s_pow(n), [&] { return "n=" + idx(n); });
    }
    report.results.push_back(c.done());
  }
  {
    Checker cu("doubling_u2n_eq_un_vn");
    Checker cv("doubling_v2n_eq_vn2_minus_2_minus_s_pow_n");
    for (std::size_t n = 0; n <= N; ++n) {
      cu.check(t[2 * n].u == t[n].u * t[n].v, [&] { return "n=" + idx(n); });
      cv.check(t[2 * n].v == t[n].v * t[n].v - 2 * minus_s_pow(n), [&] { return "n=" + idx(n); });
    }
    report.results.push_back(cu.done());
    report.results.push_back(cv.done());
  }
  {
    Checker c("gcd_um_un_eq_u_gcd");
    Int g;
    for (std::size_t m = 1; m <= N; ++m) {
      for (std::size_t n = m + 1; n <= N; ++n) {
        mpz_gcd(g.get_mpz_t(), t[m].u.get_mpz_t(), t[n].u.get_mpz_t());
        c.check(g == abs(t[std::gcd(m, n)].u), [&] { return "m=" + idx(m) + " n=" + idx(n); });
      }
    }
    report.results.push_back(c.done());
  }
  {
    Checker cu("divisibility_u");
    Checker cv("divisibility_v_odd_quotient");
    for (std::size_t m = 1; m <= N; ++m) {
      for (std::size_t n = m; n <= N; n += m) {
        cu.check(mpz_divisible_p(t[n].u.get_mpz_t(), t[m].u.get_mpz_t()) != 0,
                 [&] { return "m=" + idx(m) + " n=" + idx(n); });
        if ((n / m) % 2 == 1) {
          cv.check(mpz_divisible_p(t[n].v.get_mpz_t(), t[m].v.get_mpz_t()) != 0,
                   [&] { return "m=" + idx(m) + " n=" + idx(n); });
        }
      }
    }
    report.results.push_back(cu.done());
    report.results.push_back(cv.done());
  }
  {
    Checker cu("addition_u");
    Checker cv("addition_v");
    const std::size_t lim = std::min<std::size_t>(N, 300);
    for (std::size_t m = 0; m <= lim; ++m) {
      for (std::size_t n = 0; n <= lim; ++n) {
        cu.check(2 * t[m + n].u == t[m].u * t[n].v + t[m].v * t[n].u, [&] { return "m=" + idx(m) + " n=" + idx(n); });
        cv.check(2 * t[m + n].v == delta * t[m].u * t[n].u + t[m].v * t[n].v,
                 [&] { return "m=" + idx(m) + " n=" + idx(n); });
      }
    }
    report.results.push_back(cu.done());
    report.results.push_back(cv.done());
  }
  if (s == 1 || s == -1) {
    Checker c("negative_index");
    // Backward recurrence u_{n-1} = (u_{n+1} - r u_n) / s.
    Int a = 1, b = 0;  // u_1, u_0
    Int va = r, vb = 2;
    for (std::size_t n = 1; n <= N; ++n) {
      Int prev = (a - r * b) / s;
      Int vprev = (va - r * vb) / s;
      a = std::move(b);
      b = std::move(prev);
      va = std::move(vb);
      vb = std::move(vprev);
      auto tp = term(pair, -static_cast<long long>(n));
      c.check(tp.u == b && tp.v == vb, [&] { return "n=-" + idx(n); });
    }
    report.results.push_back(c.done());
  }

  const auto family = pair.family();
  if (family == LucasPair::Family::fibonacci) {
    Checker c("lucas_minus_one_splitting");
    for (std::size_t n = 1; n <= N; n += 2) {
      Int lhs = t[n].v - 1;
      Int rhs = n % 4 == 1 ? Int(5 * t[(n + 1) / 2].u * t[(n - 1) / 2].u) : Int(t[(n + 1) / 2].v * t[(n - 1) / 2].v);
      c.check(lhs == rhs, [&] { return "n=" + idx(n); });
    }
    report.results.push_back(c.done());
  }
  if (family == LucasPair::Family::pell) {
    Checker cm("pell_minus_one_splitting");
    for (std::size_t n = 1; n <= N; n += 2) {
      Int lhs = t[n].u - 1;
      Int rhs = n % 4 == 1 ? Int(t[(n - 1) / 2].u * t[(n + 1) / 2].v) : Int(t[(n + 1) / 2].u * t[(n - 1) / 2].v);
      cm.check(lhs == rhs, [&] { return "n=" + idx(n); });
    }
    report.results.push_back(cm.done());
    Checker cu("two_adic_u_eq_two_adic_n");
    Checker cv("two_adic_v_eq_one");
    for (std::size_t n = 1; n <= N; ++n) {
      cu.check(nu2(t[n].u) == nu2(Int(static_cast<unsigned long>(n))), [&] { return "n=" + idx(n); });
    }
    for (std::size_t n = 0; n <= N; ++n) {
      cv.check(nu2(t[n].v) == 1, [&] { return "n=" + idx(n); });
    }
    report.results.push_back(cu.done());
    report.results.push_back(cv.done());
  }
  if (family != LucasPair::Family::custom) {
    // alpha^{n-2} <= u_n <= alpha^{n-1} for n >= 1, and for the Fibonacci
    // pair also alpha^{n-1} <= v_n < alpha^{n+1} (n >= 1).
    Checker cu("alpha_power_sandwich_u");
    Checker cv("alpha_power_sandwich_v");
    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(2 * N + 128);
    const auto alpha = pair.alpha(prec);
    for (std::size_t n = 1; n <= N; ++n) {
      auto lo = alpha_power(alpha, static_cast<long long>(n) - 2);
      auto hi = alpha_power(alpha, static_cast<long long>(n) - 1);
      cu.check(at_most(lo, t[n].u) && at_least(hi, t[n].u), [&] { return "n=" + idx(n); });
    }
    if (family == LucasPair::Family::fibonacci) {
      for (std::size_t n = 1; n <= N; ++n) {
        auto lo = alpha_power(alpha, static_cast<long long>(n) - 1);
        auto hi = alpha_power(alpha, static_cast<long long>(n) + 1);
        cv.check(at_most(lo, t[n].v) && above(hi, t[n].v), [&] { return "n=" + idx(n); });
      }
      report.results.push_back(cu.done());
      report.results.push_back(cv.done());
    } else {
      report.results.push_back(cu.done());
    }
  }
  return report;
}

}  // namespace lucastk
