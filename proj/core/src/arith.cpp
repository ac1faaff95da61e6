#include <algorithm>
#include <cmath>
#include <map>

#include "lucastk/arith.hpp"
#include "lucastk/primes.hpp"

namespace lucastk {

Int euler_phi(const Factorization& f) {
  f.require_complete();
  Int phi = 1;
  for (const auto& pp : f.factors()) phi *= pow_int(pp.prime, pp.exponent - 1) * (pp.prime - 1);
  return phi;
}

DivisorFunctions divisor_functions(const Factorization& f) {
  f.require_complete();
  DivisorFunctions out{1, 1, 0, 0};
  for (const auto& pp : f.factors()) {
    out.sigma *= (pow_int(pp.prime, pp.exponent + 1) - 1) / (pp.prime - 1);
    out.tau *= pp.exponent + 1;
    out.omega += 1;
    out.big_omega += pp.exponent;
  }
  return out;
}

std::vector<Int> divisors(const Factorization& f) {
  f.require_complete();
  std::vector<Int> out{1};
  for (const auto& pp : f.factors()) {
    std::size_t base = out.size();
    Int power = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int legendre_symbol(const Int& a, const Int& p) {
  if (p < 3 || mpz_even_p(p.get_mpz_t())) throw InvalidModulus("Legendre symbol needs an odd prime, got " + to_dec(p));
  if (!is_probable_prime(p)) throw InvalidModulus(to_dec(p) + " is not prime");
  return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

unsigned valuation(const Int& p, const Int& n) {
  if (p < 2) throw InvalidArgument("valuation base must be at least 2");
  if (sgn(n) == 0) throw InvalidArgument("valuation of zero");
  Int rest = abs(n);
  return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t()));
}

Int multiplicative_order(const Int& a, const Int& m, const Factorization& group_order_multiple) {
  if (m < 1) throw InvalidModulus("modulus must be positive");
  if (m == 1) return 1;
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (g != 1) throw NotCoprime("gcd(" + to_dec(a) + ", " + to_dec(m) + ") = " + to_dec(g));
  group_order_multiple.require_complete();
  Int base = a % m;
  if (sgn(base) < 0) base += m;
  auto is_one = [&](const Int& k) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), k.get_mpz_t(), m.get_mpz_t());
    return r == 1;
  };
  Int k = group_order_multiple.n();
  if (!is_one(k)) throw InvalidArgument(to_dec(k) + " is not a multiple of the order");
  for (const auto& pp : group_order_multiple.factors()) {
    for (unsigned e = 0; e < pp.exponent; ++e) {
      Int candidate = k / pp.prime;
      if (!is_one(candidate)) break;
      k = candidate;
    }
  }
  return k;
}

namespace {

// Pairwise coprime numbers whose product has the same prime support as the
// composite cofactors, with every known prime divided out first.
std::vector<Int> cofactor_basis(const Factorization& f) {
  std::vector<Int> work;
  for (const auto& c : f.cofactors()) {
    Int rest = c;
    for (const auto& pp : f.factors()) mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), pp.prime.get_mpz_t());
    if (rest > 1) work.push_back(rest);
  }
  std::vector<Int> basis;
  while (!work.empty()) {
    Int x = std::move(work.back());
    work.pop_back();
    if (x == 1) continue;
    bool split = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      Int g;
      mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), basis[i].get_mpz_t());
      if (g == 1) continue;
      Int b = basis[i];
      basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
      work.push_back(g);
      work.push_back(x / g);
      work.push_back(b / g);
      split = true;
      break;
    }
    if (!split) {
      if (std::find(basis.begin(), basis.end(), x) == basis.end()) basis.push_back(x);
    }
  }
  // Collapse perfect powers to their roots; prime support is unchanged.
  for (auto& b : basis) {
    while (auto pp = perfect_power(b)) {
      if (pp->root < 2) break;
      b = pp->root;
    }
  }
  std::sort(basis.begin(), basis.end());
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
  return basis;
}

unsigned two_adic_part(const Int& x) { return sgn(x) == 0 ? 0 : static_cast<unsigned>(mpz_scan1(x.get_mpz_t(), 0)); }

}  // namespace

unsigned phi_two_adic_lower_bound(const Factorization& f) {
  unsigned bound = 0;
  unsigned two_exponent = 0;
  for (const auto& pp : f.factors()) {
    if (pp.prime == 2) {
      two_exponent += pp.exponent;
    } else {
      bound += two_adic_part(pp.prime - 1);
    }
  }
  for (auto b : cofactor_basis(f)) {
    unsigned twos = two_adic_part(b);
    if (twos > 0) {
      two_exponent += twos;
      mpz_tdiv_q_2exp(b.get_mpz_t(), b.get_mpz_t(), twos);
    }
    if (b == 1) continue;
    if (is_probable_prime(b)) {
      bound += two_adic_part(b - 1);
    } else {
      // Not a prime power after root collapsing: at least two odd primes.
      bound += 2;
    }
  }
  if (two_exponent > 0) bound += two_exponent - 1;
  return bound;
}

Interval phi_enclosure(const Factorization& f, mpfr_prec_t precision) {
  if (f.complete()) return Interval::from_int(euler_phi(f), precision);
  Interval known = Interval::from_int(f.n(), precision);
  for (const auto& pp : f.factors()) {
    known = known * Interval::from_rational(Rational(pp.prime - 1, pp.prime), precision);
  }
  Interval lower = known;
  Interval upper = known;
  Int min_prime = std::max<Int>(Int(static_cast<unsigned long>(f.cofactor_floor())) + 1, 2);
  for (const auto& b : cofactor_basis(f)) {
    if (is_probable_prime(b)) {
      auto factor = Interval::from_rational(Rational(b - 1, b), precision);
      lower = lower * factor;
      upper = upper * factor;
      continue;
    }
    // b has at least two prime factors, all >= min_prime, at most k of them.
    unsigned long k = 0;
    for (Int power = min_prime; power <= b; power *= min_prime) ++k;
    auto one = Interval::from_long(1, precision);
    lower = lower * pow(one - one / Interval::from_int(min_prime, precision), k);
    // Some prime factor is at most sqrt(b).
    upper = upper * (one - one / sqrt(Interval::from_int(b, precision)));
  }
  BigFloat lo = lower.lower();
  BigFloat hi = upper.upper();
  return Interval::from_bounds(lo, hi);
}

std::optional<LehmerWitness> lehmer_refutation(const Int& n, const Factorization& partial) {
  using Kind = LehmerWitness::Kind;
  if (n < 4 || (partial.complete() && partial.factors().size() == 1 && partial.factors()[0].exponent == 1)) {
    return LehmerWitness{Kind::not_composite, 0};
  }
  if (partial.factors().empty() && partial.cofactors().empty()) return LehmerWitness{Kind::not_composite, 0};
  if (mpz_even_p(n.get_mpz_t())) return LehmerWitness{Kind::even, 2};
  Int n_minus_one = n - 1;
  for (const auto& pp : partial.factors()) {
    if (pp.exponent >= 2) return LehmerWitness{Kind::square_factor, pp.prime};
  }
  for (const auto& pp : partial.factors()) {
    if (!mpz_divisible_p(n_minus_one.get_mpz_t(), Int(pp.prime - 1).get_mpz_t())) {
      return LehmerWitness{Kind::prime_minus_one, pp.prime};
    }
  }
  if (phi_two_adic_lower_bound(partial) > two_adic_part(n_minus_one)) return LehmerWitness{Kind::two_adic, 2};
  // p - 1 | n - 1 for all p | n would force 2^(n-1) = 1 (mod n)
  Int t;
  mpz_powm(t.get_mpz_t(), Int(2).get_mpz_t(), n_minus_one.get_mpz_t(), n.get_mpz_t());
  if (t != 1) return LehmerWitness{Kind::fermat, 2};
  return std::nullopt;
}

std::string to_string(LehmerWitness::Kind kind) {
  switch (kind) {
    case LehmerWitness::Kind::not_composite: return "not_composite";
    case LehmerWitness::Kind::even: return "even";
    case LehmerWitness::Kind::square_factor: return "square_factor";
    case LehmerWitness::Kind::prime_minus_one: return "prime_minus_one";
    case LehmerWitness::Kind::two_adic: return "two_adic";
    case LehmerWitness::Kind::fermat: return "fermat";
  }
  return "unknown";
}

bool lehmer_property(const Int& n, const Factorization& f) {
  if (f.n() != n) throw InvalidArgument("factorization does not match n");
  if (lehmer_refutation(n, f)) return false;
  Int phi = euler_phi(f);
  Int n_minus_one = n - 1;
  return mpz_divisible_p(n_minus_one.get_mpz_t(), phi.get_mpz_t()) != 0;
}

namespace {

constexpr mpfr_prec_t kBoundPrecision = 256;

Interval dec(const char* text) { return Interval::from_decimal(text, kBoundPrecision); }

}  // namespace

BoundCheck rs_bound_check(RsBound kind, const Int& argument) {
  BoundCheck out{Interval(kBoundPrecision), Interval(kBoundPrecision), false};
  auto x = Interval::from_int(argument, kBoundPrecision);
  auto one = Interval::from_long(1, kBoundPrecision);
  switch (kind) {
    case RsBound::prime_count: {
      if (argument < 6) throw OutOfValidityRange("prime_count bound needs n >= 6");
      if (argument > 50'000'000) throw OutOfValidityRange("prime_count evaluation capped at n = 5e7");
      auto n = to_u64(argument);
      auto primes = primes_in_range(2, nth_prime_upper_bound(n));
      out.lhs = Interval::from_int(from_u64(primes.at(n - 1)), kBoundPrecision);
      out.rhs = x * (log(x) + log(log(x)));
      out.holds = out.lhs.certainly_less(out.rhs);
      break;
    }
    case RsBound::mertens_product: {
      if (argument < 286) throw OutOfValidityRange("mertens_product bound needs x >= 286");
      if (argument > 100'000'000) throw OutOfValidityRange("mertens_product evaluation capped at x = 1e8");
      auto product = one;
      for (auto p : primes_in_range(2, to_u64(argument))) {
        product = product * Interval::from_rational(Rational(from_u64(p), from_u64(p - 1)), kBoundPrecision);
      }
      out.lhs = product;
      auto lx = log(x);
      out.rhs = dec("1.79") * lx * (one + one / (Interval::from_long(2, kBoundPrecision) * lx * lx));
      out.holds = out.lhs.certainly_less(out.rhs);
      break;
    }
    case RsBound::phi_lower: {
      if (argument < 3) throw OutOfValidityRange("phi_lower bound needs n >= 3");
      out.lhs = Interval::from_int(euler_phi(factor(argument)), kBoundPrecision);
      auto llx = log(log(x));
      out.rhs = x / (dec("1.79") * llx + dec("2.5") / llx);
      out.holds = out.lhs.certainly_greater(out.rhs);
      break;
    }
    case RsBound::omega_upper: {
      if (argument < 26) throw OutOfValidityRange("omega_upper bound needs n >= 26");
      out.lhs = Interval::from_long(divisor_functions(factor(argument)).omega, kBoundPrecision);
      out.rhs = log(x) / (log(log(x)) - dec("1.1714"));
      out.holds = out.lhs.certainly_less(out.rhs);
      break;
    }
  }
  return out;
}

RsBound parse_rs_bound(const std::string& name) {
  if (name == "prime_count") return RsBound::prime_count;
  if (name == "mertens_product") return RsBound::mertens_product;
  if (name == "phi_lower") return RsBound::phi_lower;
  if (name == "omega_upper") return RsBound::omega_upper;
  throw InvalidArgument("unknown bound: " + name);
}

}  // namespace lucastk
