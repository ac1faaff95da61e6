#include "lucastk/appearance.hpp"

#include <algorithm>

#include "lucastk/parallel.hpp"
#include "lucastk/primes.hpp"
#include "lucastk/term_factor.hpp"

namespace lucastk {

nlohmann::json AppearanceRecord::to_json() const {
  return {{"p", to_dec(p)}, {"z", to_dec(z)}, {"e", std::to_string(e)}};
}

namespace {

void require_supported(const LucasPair& pair, const Int& p) {
  if (p < 2 || !is_probable_prime(p)) throw InvalidArgument(to_dec(p) + " is not prime");
  if (mpz_divisible_p(Int(pair.s()).get_mpz_t(), p.get_mpz_t())) {
    throw UnsupportedPrime("p = " + to_dec(p) + " divides s, so p divides no term");
  }
}

// Small primes: z(2) is 1, 2 or 3 when s is odd.
std::uint64_t scan_small(const LucasPair& pair, std::uint64_t p) {
  for (std::uint64_t k = 1; k <= 2 * p + 2; ++k) {
    if (term_mod_u64(pair, k, p).first == 0) return k;
  }
  throw Error("no appearance found for p = " + std::to_string(p));
}

}  // namespace

std::uint64_t order_of_appearance_u64(const LucasPair& pair, std::uint64_t p) {
  Int pz = from_u64(p);
  require_supported(pair, pz);
  if (p == 2) return scan_small(pair, 2);
  const Int delta = pair.discriminant();
  int eps = mpz_legendre(delta.get_mpz_t(), pz.get_mpz_t());
  if (eps == 0) return p;
  std::uint64_t z = eps == 1 ? p - 1 : p + 1;
  // Descend: the indices n with p | u_n are exactly the multiples of z(p).
  for (const auto& [q, e] : factor_u64(z)) {
    for (unsigned i = 0; i < e; ++i) {
      if (term_mod_u64(pair, z / q, p).first != 0) break;
      z /= q;
    }
  }
  return z;
}

Int order_of_appearance_z(const LucasPair& pair, const Int& p) {
  if (fits_u64(p) && p < Int("18446744073709551615")) return from_u64(order_of_appearance_u64(pair, to_u64(p)));
  require_supported(pair, p);
  const Int delta = pair.discriminant();
  int eps = mpz_legendre(delta.get_mpz_t(), p.get_mpz_t());
  if (eps == 0) return p;
  Int z = p - eps;
  Factorization fz = factor(z);
  for (const auto& pp : fz.factors()) {
    for (unsigned i = 0; i < pp.exponent; ++i) {
      Int candidate = z / pp.prime;
      if (sgn(term_mod(pair, candidate, p).first) != 0) break;
      z = candidate;
    }
  }
  return z;
}

unsigned appearance_exponent(const LucasPair& pair, const Int& p, const Int& z) {
  for (unsigned long k = 3;; k *= 2) {
    Int modulus = pow_int(p, k);
    Int residue = term_mod(pair, z, modulus).first;
    if (sgn(residue) == 0) continue;
    unsigned e = valuation(p, residue);
    if (e == 0) throw InvalidArgument("z is not the order of appearance of " + to_dec(p));
    return e;
  }
}

AppearanceRecord order_of_appearance(const LucasPair& pair, const Int& p) {
  AppearanceRecord rec;
  rec.p = p;
  rec.z = order_of_appearance_z(pair, p);
  rec.e = appearance_exponent(pair, p, rec.z);
  return rec;
}

Interval appearance_exponent_bound(const LucasPair& pair, const Int& p, mpfr_prec_t precision) {
  auto pi = Interval::from_int(p, precision);
  auto one = Interval::from_long(1, precision);
  auto two = Interval::from_long(2, precision);
  return (pi + one) * log(abs(pair.alpha(precision))) / (two * log(pi));
}

std::vector<Int> primitive_prime_factors(const LucasPair& pair, long long n, Side side, const Factorization& f) {
  f.require_complete();
  if (f.n() != abs(term(pair, n).on(side))) throw InvalidArgument("factorization does not match the term");
  std::vector<Int> out;
  for (const auto& pp : f.factors()) {
    const Int& p = pp.prime;
    if (mpz_divisible_p(Int(pair.s()).get_mpz_t(), p.get_mpz_t())) continue;
    if (side == Side::fundamental) {
      if (order_of_appearance_z(pair, p) == from_ll(n)) out.push_back(p);
      continue;
    }
    if (p == 2 || fits_u64(p)) {
      bool earlier = false;
      if (p == 2) {
        for (long long m = 1; m < n && !earlier; ++m) earlier = term_mod_u64(pair, static_cast<std::uint64_t>(m), 2).second == 0;
      } else {
        // Odd p divides v_m exactly when z(p) | 2m and z(p) does not divide m.
        earlier = order_of_appearance_z(pair, p) != 2 * from_ll(n);
      }
      if (!earlier) out.push_back(p);
      continue;
    }
    if (order_of_appearance_z(pair, p) == 2 * from_ll(n)) out.push_back(p);
  }
  return out;
}

nlohmann::json AuditReport::to_json() const {
  auto ints = [](const std::vector<long long>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (auto x : v) a.push_back(std::to_string(x));
    return a;
  };
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& e : entries) {
    nlohmann::json prim = nlohmann::json::array();
    for (const auto& p : e.primitive) prim.push_back(to_dec(p));
    nlohmann::json row = {{"n", std::to_string(e.n)}, {"status", e.status}, {"primitive", prim},
                          {"congruence_ok", e.congruence_ok}};
    if (e.mcdaniel_ok) row["one_mod_four_factor"] = *e.mcdaniel_ok;
    rows.push_back(row);
  }
  return {{"entries", rows},
          {"exceptions", ints(exceptions)},
          {"trivial", ints(trivial)},
          {"congruences_ok", congruences_ok},
          {"one_mod_four_ok", mcdaniel_ok}};
}

AuditReport primitive_divisor_audit(const LucasPair& pair, Side side, long long n_max, const Effort& effort,
                                    unsigned jobs) {
  if (n_max < 1 || n_max > 120) throw InvalidArgument("audit needs 1 <= n_max <= 120");
  const Int delta = pair.discriminant();
  auto entries = parallel_map(static_cast<std::size_t>(n_max), jobs, [&](std::size_t i) {
    AuditEntry e;
    e.n = static_cast<long long>(i) + 1;
    Factorization f = factor_term(pair, e.n, side, effort);
    f.require_complete();
    if (f.n() == 1) {
      e.status = "trivial";
      return e;
    }
    e.primitive = primitive_prime_factors(pair, e.n, side, f);
    e.status = e.primitive.empty() ? "exception" : "primitive";
    for (const auto& p : e.primitive) {
      if (mpz_divisible_p(delta.get_mpz_t(), p.get_mpz_t())) continue;
      Int z = order_of_appearance_z(pair, p);
      Int r = p % z;
      if (r != 1 && r != z - 1 && z > 2) e.congruence_ok = false;
    }
    if (pair.family() == LucasPair::Family::pell && side == Side::fundamental && e.n > 14) {
      bool found = false;
      for (const auto& pp : f.factors()) found = found || (pp.prime % 4 == 1);
      e.mcdaniel_ok = found;
    }
    return e;
  });
  AuditReport report;
  for (auto& e : entries) {
    if (e.status == "exception") report.exceptions.push_back(e.n);
    if (e.status == "trivial") report.trivial.push_back(e.n);
    report.congruences_ok = report.congruences_ok && e.congruence_ok;
    if (e.mcdaniel_ok) report.mcdaniel_ok = report.mcdaniel_ok && *e.mcdaniel_ok;
  }
  report.entries = std::move(entries);
  return report;
}

std::string to_string(CensusPredicate predicate) {
  return predicate == CensusPredicate::z_odd ? "z_odd" : "z_not_div_4";
}

CensusPredicate parse_census_predicate(const std::string& text) {
  if (text == "z_odd" || text == "z-odd") return CensusPredicate::z_odd;
  if (text == "z_not_div_4" || text == "z-not-div-4") return CensusPredicate::z_not_div_4;
  throw InvalidArgument("unknown census predicate: " + text);
}

nlohmann::json CensusResult::to_json() const {
  nlohmann::json prefixes = nlohmann::json::object();
  for (const auto& [k, v] : prefix_products) prefixes[std::to_string(k)] = v.to_fixed(10);
  return {{"prime_count", std::to_string(prime_count)},
          {"predicate", to_string(predicate)},
          {"count", std::to_string(count)},
          {"product", product.to_fixed(10)},
          {"product_upper", product.upper().to_fixed(10, MPFR_RNDU)},
          {"prefix_products", prefixes}};
}

CensusResult appearance_census(const LucasPair& pair, std::uint64_t prime_count, CensusPredicate predicate,
                               const std::vector<std::uint64_t>& prefixes, unsigned jobs) {
  if (prime_count > 100'000) throw InvalidArgument("census limited to the first 10^5 primes");
  const auto primes = first_primes(prime_count);
  const auto zs = parallel_map(primes.size(), jobs, [&](std::size_t i) -> std::uint64_t {
    if (pair.s() % static_cast<long>(primes[i]) == 0) return 0;
    return order_of_appearance_u64(pair, primes[i]);
  });
  constexpr mpfr_prec_t prec = 128;
  CensusResult out;
  out.prime_count = prime_count;
  out.predicate = predicate;
  out.product = Interval::from_long(1, prec);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    std::uint64_t z = zs[i];
    if (z == 0) continue;
    bool match = predicate == CensusPredicate::z_odd ? (z % 2 == 1) : (z % 4 != 0);
    if (!match) continue;
    ++out.count;
    out.product = out.product * Interval::from_rational(Rational(from_u64(primes[i]), from_u64(primes[i] - 1)), prec);
    if (std::find(prefixes.begin(), prefixes.end(), out.count) != prefixes.end()) {
      out.prefix_products.emplace(out.count, out.product);
    }
  }
  return out;
}

nlohmann::json ReciprocalSum::to_json() const {
  return {{"n", std::to_string(n)},
          {"value", to_dec(value)},
          {"value_decimal", Interval::from_rational(value, 128).to_fixed(12)},
          {"bound_a", bound_a.to_fixed(12)},
          {"bound_b", bound_b.to_fixed(12)},
          {"holds", holds}};
}

ReciprocalSum sum_primitive_reciprocals(const LucasPair& pair, long long n, const Factorization& f) {
  if (n <= 2) throw InvalidArgument("S_n needs n > 2");
  ReciprocalSum out;
  out.n = n;
  out.value = 0;
  for (const auto& p : primitive_prime_factors(pair, n, Side::fundamental, f)) out.value += Rational(1, p - 1);
  out.value.canonicalize();
  constexpr mpfr_prec_t prec = 128;
  auto x = Interval::from_long(n, prec);
  auto four = Interval::from_long(4, prec);
  out.bound_a = Interval::from_long(2, prec) * log(x) / x;
  Int phi_n = euler_phi(factor(from_ll(n)));
  out.bound_b = (four + four * log(log(x))) / Interval::from_int(phi_n, prec);
  auto s = Interval::from_rational(out.value, prec);
  out.holds = s.certainly_less(out.bound_a) && s.certainly_less(out.bound_b);
  return out;
}

}  // namespace lucastk
