#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lucastk/arith.hpp"
#include "lucastk/lucas.hpp"

namespace lucastk {

/// Machine-readable record of a finished search. Every number is stored as a
/// decimal string.
struct SolutionCertificate {
  std::string equation_id;
  nlohmann::json parameters = nlohmann::json::object();
  Int search_bound;
  nlohmann::json solutions = nlohmann::json::array();
  /// Replay data: factorizations or residues backing each solution, plus a
  /// map from decision method to the indices it settled.
  nlohmann::json evidence = nlohmann::json::object();
  bool exhaustive = true;
  /// Search points left undecided, e.g. "n=731" or "X=5,m=37".
  std::vector<std::string> uncovered;
  std::vector<std::string> notes;

  nlohmann::json to_json() const;
};

/// Pretty-printed JSON with sorted keys and a trailing newline.
std::string canonical_dump(const nlohmann::json& j);

/// Re-verifies every listed solution by direct substitution.
bool replay_certificate(const nlohmann::json& certificate);

struct ScanOptions {
  Effort effort{2'000'000, 1'000'000};
  unsigned jobs = 1;
};

/// a (b^m - 1) / (b - 1) for a digit 1 <= a < b.
struct RepdigitForm {
  unsigned digit = 1;
  unsigned long length = 1;
  unsigned base = 10;
  Int value() const;
};

/// Digit and length when x > 0 is a base-b repdigit.
std::optional<RepdigitForm> as_repdigit(const Int& x, unsigned base = 10);

SolutionCertificate phi_fixed_point_scan(const LucasPair& pair, long long n_limit, const ScanOptions& options = {});

SolutionCertificate repdigit_scan(const LucasPair& pair, Side side, long long n_limit, unsigned base = 10);

struct StructureClauses {
  bool digit_is_8 = false;
  bool length_even = false;
  bool index_is_prime_or_prime_square = false;
  bool cube_divides_fermat_quotient = false;
  std::optional<Int> prime;
  bool all() const { return digit_is_8 && length_even && index_is_prime_or_prime_square && cube_divides_fermat_quotient; }
  nlohmann::json to_json() const;
};

/// The necessary shape of a large solution n of phi(L_n) = d (10^m - 1) / 9:
/// d = 8, m even, n = p or p^2 with p^3 | 10^{p-1} - 1.
StructureClauses phi_repdigit_structure(long long n, unsigned digit, unsigned long length);

SolutionCertificate phi_repdigit_scan(long long n_limit, const ScanOptions& options = {});

enum class PowerForm { full, repunit };
std::string to_string(PowerForm form);
PowerForm parse_power_form(const std::string& text);

/// All (X, m, n) with X in [x_min, x_max], 1 <= m <= m_limit, 1 <= n <= n_limit
/// and phi(F(X, m)) = F(X, n), where F is X^k - 1 or (X^k - 1)/(X - 1).
SolutionCertificate phi_power_form_scan(long x_min, long x_max, unsigned long m_limit, unsigned long n_limit,
                                        PowerForm form, const ScanOptions& options = {});

SolutionCertificate ljunggren_check(long x_limit, long n_limit);

/// Odd primes q <= q_limit for which 5^q - 1 has no prime factor p = 1 (mod 5).
/// The evidence records such a p for every other q.
SolutionCertificate base5_q_set_scan(long q_limit, const ScanOptions& options = {});

/// Odd primes p <= p_limit, p not dividing b, with p^k | b^{p-1} - 1.
std::vector<std::uint64_t> wieferich_scan(std::uint64_t base, std::uint64_t p_limit, unsigned k, unsigned jobs = 1);
SolutionCertificate wieferich_certificate(std::uint64_t base, std::uint64_t p_limit, unsigned k, unsigned jobs = 1);

struct ExponentException {
  std::uint64_t prime;
  unsigned exponent;
};

/// Primes r <= r_limit with e_r >= 2 for the Pell pair.
std::vector<ExponentException> pell_exponent_exception_scan(std::uint64_t r_limit, unsigned jobs = 1);
SolutionCertificate pell_exponent_exception_certificate(std::uint64_t r_limit, unsigned jobs = 1);

SolutionCertificate lehmer_scan(const LucasPair& pair, Side side, long long n_limit, const ScanOptions& options = {});

/// Pairs 0 <= m < n <= n_limit with (term m) (term n) a perfect square.
SolutionCertificate square_product_scan(const LucasPair& pair, Side side, long long n_limit);

/// Indices n <= n_limit whose term is a perfect power y^k, k >= 2.
SolutionCertificate perfect_power_scan(const LucasPair& pair, Side side, long long n_limit);

struct ModulusTrace {
  unsigned modulus = 0;
  std::uint64_t period = 0;
  std::vector<std::uint64_t> cycle;
  /// The cycle followed by its first two entries, as printed in period tables.
  std::string residue_line;
};

struct DigitVerdict {
  unsigned digit = 0;
  std::vector<unsigned> eliminating_moduli;  // empty: not eliminated
  /// Residues of a (10^m - 1)/9 modulo each modulus, for m >= min_length.
  std::vector<std::pair<unsigned, std::vector<std::uint64_t>>> target_residues;
  std::string verdict() const;
};

struct EliminationTrace {
  Side side = Side::fundamental;
  unsigned long min_length = 1;
  std::vector<ModulusTrace> moduli;
  std::vector<DigitVerdict> digits;

  nlohmann::json to_json() const;
};

/// For each digit, finds the smallest subset of `moduli` under which no term
/// of the sequence is congruent to a (10^m - 1)/9 with m >= min_length, for
/// every modulus of the subset simultaneously.
EliminationTrace modular_elimination_trace(const LucasPair& pair, Side side, const std::vector<unsigned>& digits,
                                           const std::vector<unsigned>& moduli, unsigned long min_length);

}  // namespace lucastk
