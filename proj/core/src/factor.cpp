#include <algorithm>
#include <map>
#include <utility>

#include "lucastk/arith.hpp"
#include "lucastk/primes.hpp"

namespace lucastk {

Factorization::Factorization(Int n, std::vector<PrimePower> factors, std::vector<Int> cofactors,
                             std::uint64_t cofactor_floor)
    : n_(std::move(n)),
      factors_(std::move(factors)),
      cofactors_(std::move(cofactors)),
      cofactor_floor_(cofactor_floor) {
  check_structure();
  for (const auto& pp : factors_) {
    if (!is_probable_prime(pp.prime)) {
      throw InvalidArgument("factorization lists a non-prime: " + to_dec(pp.prime));
    }
  }
  for (const auto& c : cofactors_) {
    if (is_probable_prime(c)) throw InvalidArgument("cofactor is prime: " + to_dec(c));
  }
}

Factorization Factorization::trusted(Int n, std::vector<PrimePower> factors, std::vector<Int> cofactors,
                                     std::uint64_t cofactor_floor) {
  Factorization f;
  f.n_ = std::move(n);
  f.factors_ = std::move(factors);
  f.cofactors_ = std::move(cofactors);
  f.cofactor_floor_ = cofactor_floor;
  f.check_structure();
  return f;
}

void Factorization::check_structure() const {
  if (sgn(n_) <= 0) throw InvalidArgument("factorization of a non-positive number");
  Int product = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& pp = factors_[i];
    if (pp.exponent == 0) throw InvalidArgument("zero exponent in factorization");
    if (pp.prime < 2) throw InvalidArgument("factor below 2 in factorization");
    if (i > 0 && factors_[i - 1].prime >= pp.prime) {
      throw InvalidArgument("factorization primes not strictly increasing");
    }
    product *= pow_int(pp.prime, pp.exponent);
  }
  for (const auto& c : cofactors_) {
    if (c < 4) throw InvalidArgument("cofactor below 4");
    product *= c;
  }
  if (product != n_) throw InvalidArgument("factorization product differs from n = " + to_dec(n_));
}

const Factorization& Factorization::require_complete() const {
  if (!complete()) {
    throw IncompleteFactorization("factorization of " + to_dec(n_) + " has " +
                                  std::to_string(cofactors_.size()) + " composite cofactor(s)");
  }
  return *this;
}

nlohmann::json Factorization::to_json() const {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& pp : factors_) factors.push_back({to_dec(pp.prime), std::to_string(pp.exponent)});
  nlohmann::json j = {{"n", to_dec(n_)}, {"factors", factors}, {"complete", complete()}};
  if (!complete()) {
    nlohmann::json cof = nlohmann::json::array();
    for (const auto& c : cofactors_) cof.push_back(to_dec(c));
    j["composite_cofactors"] = cof;
    j["cofactor_floor"] = std::to_string(cofactor_floor_);
  }
  return j;
}

Factorization Factorization::from_json(const nlohmann::json& j) {
  std::vector<PrimePower> factors;
  for (const auto& item : j.at("factors")) {
    const auto& e = item.at(1);
    unsigned exponent = e.is_string() ? static_cast<unsigned>(std::stoul(e.get<std::string>())) : e.get<unsigned>();
    factors.push_back({parse_int(item.at(0).get<std::string>()), exponent});
  }
  std::vector<Int> cofactors;
  std::uint64_t floor = 1;
  if (j.contains("composite_cofactors")) {
    for (const auto& c : j.at("composite_cofactors")) cofactors.push_back(parse_int(c.get<std::string>()));
    floor = std::stoull(j.at("cofactor_floor").get<std::string>());
  }
  return Factorization(parse_int(j.at("n").get<std::string>()), std::move(factors), std::move(cofactors), floor);
}

EffortExceeded::EffortExceeded(Factorization partial)
    : Error("factoring budget exhausted for " + to_dec(partial.n())), partial_(std::move(partial)) {}

namespace {

// Below this bound the first 13 prime bases form a deterministic witness set.
const Int& deterministic_mr_bound() {
  static const Int bound("3317044064679887385961981", 10);
  return bound;
}

bool strong_probable_prime(const Int& n, const Int& base, const Int& d, unsigned s) {
  Int x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  Int minus_one = n - 1;
  if (x == 1 || x == minus_one) return true;
  for (unsigned i = 1; i < s; ++i) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
    if (x == minus_one) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace

bool is_probable_prime(const Int& n) {
  if (n < 2) return false;
  if (fits_u64(n)) return is_prime_u64(to_u64(n));
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u, 47u}) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  const auto& primes = small_primes();
  for (std::size_t i = 15; i < 168; ++i) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), primes[i])) return false;
  }
  Int d = n - 1;
  unsigned s = static_cast<unsigned>(mpz_scan1(d.get_mpz_t(), 0));
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  if (n < deterministic_mr_bound()) {
    for (unsigned long a : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul, 41ul}) {
      if (!strong_probable_prime(n, Int(a), d, s)) return false;
    }
    return true;
  }
  if (!strong_probable_prime(n, Int(2), d, s)) return false;
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(n);
  Int span = n - 3;
  for (int round = 0; round < 64; ++round) {
    Int a = rng.get_z_range(span) + 2;
    if (!strong_probable_prime(n, a, d, s)) return false;
  }
  return true;
}

std::optional<Int> rho_split(const Int& n, std::uint64_t& budget) {
  constexpr std::uint64_t kBatch = 128;
  Int x, y, ys, q, g, diff;
  for (unsigned long c = 1; budget > 0; ++c) {
    y = 2;
    q = 1;
    g = 1;
    auto step = [&](Int& v) {
      mpz_mul(v.get_mpz_t(), v.get_mpz_t(), v.get_mpz_t());
      mpz_add_ui(v.get_mpz_t(), v.get_mpz_t(), c);
      mpz_tdiv_r(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    for (std::uint64_t r = 1; g == 1; r <<= 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) step(y);
      for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        std::uint64_t m = std::min(kBatch, r - k);
        if (budget < m + r) {
          budget = 0;
          return std::nullopt;
        }
        budget -= m;
        for (std::uint64_t i = 0; i < m; ++i) {
          step(y);
          mpz_sub(diff.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
          mpz_mul(q.get_mpz_t(), q.get_mpz_t(), diff.get_mpz_t());
          mpz_tdiv_r(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      budget -= std::min(budget, r);
    }
    if (g == n) {
      do {
        step(ys);
        mpz_sub(diff.get_mpz_t(), x.get_mpz_t(), ys.get_mpz_t());
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
  return std::nullopt;
}

namespace {

Factorization assemble(const Int& n, const std::map<Int, unsigned>& primes, std::vector<Int> cofactors,
                       std::uint64_t floor) {
  std::vector<PrimePower> factors;
  factors.reserve(primes.size());
  for (const auto& [p, e] : primes) factors.push_back({p, e});
  std::sort(cofactors.begin(), cofactors.end());
  return Factorization::trusted(n, std::move(factors), std::move(cofactors), cofactors.empty() ? 1 : floor);
}

}  // namespace

Factorization factor_partial(const Int& n, const Effort& effort) {
  if (n < 1) throw InvalidArgument("factor requires n >= 1");
  std::map<Int, unsigned> primes;
  if (fits_u64(n)) {
    for (const auto& [p, e] : factor_u64(to_u64(n))) primes[from_u64(p)] += e;
    return assemble(n, primes, {}, 1);
  }

  Int rest = n;
  const auto& table = small_primes();
  std::uint64_t floor = 1;
  for (std::uint32_t p : table) {
    if (p > effort.trial_limit) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      unsigned e = 0;
      while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        ++e;
      }
      primes[Int(p)] += e;
    }
    floor = p;
    if (Int(p) * p > rest) break;
  }

  std::vector<Int> stack;
  std::vector<Int> cofactors;
  if (rest > 1) stack.push_back(rest);
  std::uint64_t budget = effort.rho_iterations;
  while (!stack.empty()) {
    Int c = std::move(stack.back());
    stack.pop_back();
    if (c == 1) continue;
    if (fits_u64(c)) {
      for (const auto& [p, e] : factor_u64(to_u64(c))) primes[from_u64(p)] += e;
      continue;
    }
    if (is_probable_prime(c)) {
      primes[c] += 1;
      continue;
    }
    if (auto pp = perfect_power(c)) {
      for (unsigned long i = 0; i < pp->exponent; ++i) stack.push_back(pp->root);
      continue;
    }
    if (auto d = rho_split(c, budget)) {
      Int other = c / *d;
      stack.push_back(other);
      stack.push_back(*d);
    } else {
      cofactors.push_back(c);
    }
  }
  if (!cofactors.empty() && Int(floor) * floor > cofactors.front()) {
    // Trial division stopped early only when rest became small, in which case
    // nothing is left over; keep the floor honest anyway.
    floor = 1;
  }
  return assemble(n, primes, std::move(cofactors), floor);
}

Factorization factor(const Int& n, const Effort& effort) {
  Factorization f = factor_partial(n, effort);
  if (!f.complete()) throw EffortExceeded(f);
  return f;
}

Factorization combine(const std::vector<Factorization>& parts) {
  std::map<Int, unsigned> primes;
  std::vector<Int> cofactors;
  Int n = 1;
  std::uint64_t floor = UINT64_MAX;
  for (const auto& part : parts) {
    n *= part.n();
    for (const auto& pp : part.factors()) primes[pp.prime] += pp.exponent;
    for (const auto& c : part.cofactors()) cofactors.push_back(c);
    if (!part.complete()) floor = std::min(floor, part.cofactor_floor());
  }
  return assemble(n, primes, std::move(cofactors), floor == UINT64_MAX ? 1 : floor);
}

}  // namespace lucastk
