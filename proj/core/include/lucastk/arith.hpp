#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lucastk/bigint.hpp"
#include "lucastk/errors.hpp"
#include "lucastk/interval.hpp"

namespace lucastk {

struct PrimePower {
  Int prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime-power decomposition of a positive integer. A factorization may be
/// partial: composite cofactors that could not be split within the effort
/// budget are kept separately, and every prime factor of those cofactors is
/// known to exceed cofactor_floor().
class Factorization {
 public:
  Factorization() = default;

  /// Validates the invariants: primes strictly increasing and prime, positive
  /// exponents, cofactors composite, and the product equal to n.
  Factorization(Int n, std::vector<PrimePower> factors, std::vector<Int> cofactors = {},
                std::uint64_t cofactor_floor = 1);

  /// Skips the primality checks; product and ordering are still verified.
  static Factorization trusted(Int n, std::vector<PrimePower> factors, std::vector<Int> cofactors,
                               std::uint64_t cofactor_floor);

  const Int& n() const { return n_; }
  const std::vector<PrimePower>& factors() const { return factors_; }
  const std::vector<Int>& cofactors() const { return cofactors_; }
  std::uint64_t cofactor_floor() const { return cofactor_floor_; }
  bool complete() const { return cofactors_.empty(); }

  /// Throws IncompleteFactorization when a composite cofactor remains.
  const Factorization& require_complete() const;

  nlohmann::json to_json() const;
  static Factorization from_json(const nlohmann::json& j);

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  void check_structure() const;

  Int n_ = 1;
  std::vector<PrimePower> factors_;
  std::vector<Int> cofactors_;
  std::uint64_t cofactor_floor_ = 1;
};

/// Budget for factor(). Measured in rho iterations so results do not depend
/// on the machine.
struct Effort {
  std::uint64_t rho_iterations = 20'000'000;
  std::uint32_t trial_limit = 1'000'000;
};

class EffortExceeded : public Error {
 public:
  explicit EffortExceeded(Factorization partial);
  const Factorization& partial() const { return partial_; }

 private:
  Factorization partial_;
};

/// Deterministic Miller-Rabin below 3.3e24 (13 prime bases); above that,
/// base 2 plus 64 rounds with witnesses drawn from a generator seeded by n.
bool is_probable_prime(const Int& n);

/// Complete factorization of n >= 1; throws EffortExceeded with the partial
/// result when the rho budget runs out.
Factorization factor(const Int& n, const Effort& effort = {});

/// Same as factor(), but returns partial results instead of throwing.
Factorization factor_partial(const Int& n, const Effort& effort = {});

/// Splits a composite with Brent-Pollard rho. Seeds follow the fixed schedule
/// x0 = 2, c = 1, 2, 3, ...; `budget` is decremented by the iterations used.
std::optional<Int> rho_split(const Int& n, std::uint64_t& budget);

/// Factorization of the product of the parts' values. The cofactor floor is
/// the smallest floor among the parts.
Factorization combine(const std::vector<Factorization>& parts);

Int euler_phi(const Factorization& f);

struct DivisorFunctions {
  Int sigma;
  Int tau;
  unsigned omega = 0;
  unsigned big_omega = 0;
};

DivisorFunctions divisor_functions(const Factorization& f);

/// All positive divisors in increasing order.
std::vector<Int> divisors(const Factorization& f);

/// Euler's criterion value of a modulo the odd prime p.
int legendre_symbol(const Int& a, const Int& p);

/// Largest k with p^k | n.
unsigned valuation(const Int& p, const Int& n);

/// Least k >= 1 with a^k = 1 (mod m). `group_order_multiple` factors a known
/// multiple N of the order (phi(m), or p - 1 for prime m).
Int multiplicative_order(const Int& a, const Int& m, const Factorization& group_order_multiple);

/// n composite and phi(n) | n - 1. Works from a partial factorization when a
/// refutation witness exists; otherwise requires a complete one.
bool lehmer_property(const Int& n, const Factorization& f);

/// Why a number cannot have the Lehmer property.
struct LehmerWitness {
  enum class Kind { not_composite, even, square_factor, prime_minus_one, two_adic, fermat };
  Kind kind;
  Int prime;  // the offending prime for square_factor / prime_minus_one; the base for fermat
};

std::optional<LehmerWitness> lehmer_refutation(const Int& n, const Factorization& partial);
std::string to_string(LehmerWitness::Kind kind);

/// Enclosure of phi(n) from a possibly partial factorization.
Interval phi_enclosure(const Factorization& f, mpfr_prec_t precision = 256);

/// Lower bound for nu_2(phi(n)) that holds whatever the unknown cofactor
/// primes are. Exact when the factorization is complete.
unsigned phi_two_adic_lower_bound(const Factorization& f);

enum class RsBound { prime_count, mertens_product, phi_lower, omega_upper };

struct BoundCheck {
  Interval lhs;
  Interval rhs;
  bool holds = false;
};

/// Evaluates both sides of one of the classical explicit inequalities:
///   prime_count     p_n < n(ln n + ln ln n)                       n >= 6
///   mertens_product prod_{p<=x} p/(p-1) < 1.79 ln x (1 + 1/(2 ln^2 x))  x >= 286
///   phi_lower       phi(n) > n / (1.79 ln ln n + 2.5 / ln ln n)    n >= 3
///   omega_upper     omega(n) < ln n / (ln ln n - 1.1714)           n >= 26
BoundCheck rs_bound_check(RsBound kind, const Int& argument);

RsBound parse_rs_bound(const std::string& name);

}  // namespace lucastk
