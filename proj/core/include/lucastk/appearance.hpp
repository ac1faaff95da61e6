#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lucastk/arith.hpp"
#include "lucastk/interval.hpp"
#include "lucastk/lucas.hpp"

namespace lucastk {

struct AppearanceRecord {
  Int p;
  Int z;
  unsigned e = 0;

  nlohmann::json to_json() const;
};

/// Least k >= 1 with p | u_k. Throws UnsupportedPrime when p | s.
Int order_of_appearance_z(const LucasPair& pair, const Int& p);
std::uint64_t order_of_appearance_u64(const LucasPair& pair, std::uint64_t p);

AppearanceRecord order_of_appearance(const LucasPair& pair, const Int& p);

/// nu_p(u_z) for z = z(p).
unsigned appearance_exponent(const LucasPair& pair, const Int& p, const Int& z);

/// Upper bound (p + 1) ln(alpha) / (2 ln p) on e_p.
Interval appearance_exponent_bound(const LucasPair& pair, const Int& p, mpfr_prec_t precision = 128);

/// Primes of the term that divide no earlier term of the same side: z(p) = n
/// for u_n; for v_n the prime divides v_n but no v_m with 1 <= m < n.
std::vector<Int> primitive_prime_factors(const LucasPair& pair, long long n, Side side, const Factorization& f);

struct AuditEntry {
  long long n = 0;
  std::string status;  // "primitive", "trivial" (term is +-1) or "exception"
  std::vector<Int> primitive;
  bool congruence_ok = true;  // every primitive p with p not dividing D is +-1 mod z(p)
  std::optional<bool> mcdaniel_ok;  // Pell, n > 14: some prime factor is 1 mod 4
};

struct AuditReport {
  std::vector<AuditEntry> entries;
  std::vector<long long> exceptions;
  std::vector<long long> trivial;
  bool congruences_ok = true;
  bool mcdaniel_ok = true;

  nlohmann::json to_json() const;
};

AuditReport primitive_divisor_audit(const LucasPair& pair, Side side, long long n_max, const Effort& effort = {},
                                    unsigned jobs = 1);

enum class CensusPredicate { z_odd, z_not_div_4 };

std::string to_string(CensusPredicate predicate);
CensusPredicate parse_census_predicate(const std::string& text);

struct CensusResult {
  std::uint64_t prime_count = 0;
  CensusPredicate predicate = CensusPredicate::z_odd;
  std::uint64_t count = 0;
  /// prod p/(p-1) over the matching primes.
  Interval product{128};
  /// Running products after the k-th matching prime, for each requested k.
  std::map<std::uint64_t, Interval> prefix_products;

  nlohmann::json to_json() const;
};

CensusResult appearance_census(const LucasPair& pair, std::uint64_t prime_count, CensusPredicate predicate,
                               const std::vector<std::uint64_t>& prefixes = {}, unsigned jobs = 1);

struct ReciprocalSum {
  long long n = 0;
  Rational value;
  Interval bound_a{128};
  Interval bound_b{128};
  bool holds = false;

  nlohmann::json to_json() const;
};

/// S_n = sum of 1/(p - 1) over the primitive primes of u_n, against
/// min(2 ln n / n, (4 + 4 ln ln n) / phi(n)).
ReciprocalSum sum_primitive_reciprocals(const LucasPair& pair, long long n, const Factorization& f);

}  // namespace lucastk
