#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "lucastk/bigint.hpp"
#include "lucastk/errors.hpp"
#include "lucastk/interval.hpp"

namespace lucastk {

/// Which of the two sequences of a pair: u (fundamental) or v (companion).
enum class Side { fundamental, companion };

std::string to_string(Side side);
Side parse_side(const std::string& text);

/// Recurrence x^2 = r x + s, with u_0 = 0, u_1 = 1 and v_0 = 2, v_1 = r.
class LucasPair {
 public:
  enum class Family { fibonacci, pell, custom };

  /// Throws InvalidArgument unless gcd(r, s) = 1, r != 0 and r^2 + 4s > 0.
  LucasPair(long r, long s);

  static LucasPair fibonacci() { return LucasPair(1, 1); }
  static LucasPair pell() { return LucasPair(2, 1); }
  /// The pair (b + 1, -b), whose u-terms are the base-b repunits.
  static LucasPair repunit(long base);

  long r() const { return r_; }
  long s() const { return s_; }
  Int discriminant() const { return Int(r_) * r_ + 4 * Int(s_); }
  Family family() const;

  /// Dominant root (r + sqrt(D)) / 2 and its conjugate.
  Interval alpha(mpfr_prec_t precision) const;
  Interval beta(mpfr_prec_t precision) const;

  nlohmann::json to_json() const;

  friend bool operator==(const LucasPair&, const LucasPair&) = default;

 private:
  long r_;
  long s_;
};

/// A pair together with the side a user asked for, e.g. "lucas" is the
/// Fibonacci pair read on its companion side.
struct PairSpec {
  LucasPair pair;
  Side side;
  std::string label;
};

/// Accepts fibonacci, lucas, pell, pell-lucas and custom:r,s.
PairSpec parse_pair(const std::string& text);

struct TermPair {
  long long index = 0;
  Int u;
  Int v;

  const Int& on(Side side) const { return side == Side::fundamental ? u : v; }
};

constexpr long long kDefaultIndexGuard = 10'000'000;

/// Exact (u_n, v_n) by index doubling. Negative n requires |s| = 1, since
/// otherwise the terms are not integers.
TermPair term(const LucasPair& pair, long long n, long long guard = kDefaultIndexGuard);

/// The first `count` terms u_0.. and v_0.. by the plain recurrence.
std::vector<TermPair> terms_upto(const LucasPair& pair, std::size_t count);

/// (u_n mod m, v_n mod m) for n >= 0.
std::pair<Int, Int> term_mod(const LucasPair& pair, const Int& n, const Int& m);
std::pair<std::uint64_t, std::uint64_t> term_mod_u64(const LucasPair& pair, std::uint64_t n, std::uint64_t m);

struct PeriodInfo {
  std::uint64_t modulus = 0;
  std::uint64_t period = 0;
  std::uint64_t preperiod = 0;
  /// Residues from index `preperiod` for one full period.
  std::vector<std::uint64_t> u_cycle;
  std::vector<std::uint64_t> v_cycle;

  const std::vector<std::uint64_t>& cycle(Side side) const { return side == Side::fundamental ? u_cycle : v_cycle; }
  /// Residue of the chosen sequence at index n.
  std::uint64_t at(Side side, std::uint64_t n) const;
};

constexpr std::uint64_t kDefaultModulusGuard = 1'000'000;

PeriodInfo period_mod(const LucasPair& pair, std::uint64_t m, std::uint64_t guard = kDefaultModulusGuard);

/// Least n >= 0 whose term on `side` equals x.
std::optional<long long> is_member(const LucasPair& pair, const Int& x, Side side = Side::fundamental);

struct IdentityResult {
  std::string name;
  std::uint64_t checked = 0;
  bool passed = true;
  std::string counterexample;
};

struct IdentityReport {
  std::vector<IdentityResult> results;
  bool all_passed() const;
  nlohmann::json to_json() const;
};

IdentityReport identity_suite(const LucasPair& pair, long long n_max);

}  // namespace lucastk
