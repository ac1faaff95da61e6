#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lucastk/bigint.hpp"
#include "lucastk/errors.hpp"
#include "lucastk/interval.hpp"

namespace lucastk {

struct CFExpansion {
  std::vector<Int> quotients;
  /// All quotients are certified; the count is kept for symmetry with the
  /// interval input it came from.
  std::size_t certified_count = 0;
  /// True when the expansion terminated because the input is that rational.
  bool terminated = false;
};

/// Emits quotients while every real in the enclosure shares the same floor.
/// Throws EnclosureTooWide if not even a0 is certain.
CFExpansion cf_expand(const Interval& x, std::size_t max_quotients);

/// Euclidean expansion of a rational; the last quotient is > 1 unless the
/// expansion is a single integer.
CFExpansion cf_expand(const Rational& x, std::size_t max_quotients = std::numeric_limits<std::size_t>::max());

struct Convergent {
  Int p;
  Int q;
};

/// p_j = a_j p_{j-1} + p_{j-2}, q_j = a_j q_{j-1} + q_{j-2}.
std::vector<Convergent> convergents(const CFExpansion& cf);
std::vector<Convergent> convergents(const std::vector<Int>& quotients);

/// ||x||, the distance to the nearest integer. Throws AmbiguousHalfway when
/// the enclosure meets a half-integer.
Interval nearest_int_distance(const Interval& x);

/// A real number that can be re-evaluated at any precision.
using RealFn = std::function<Interval(mpfr_prec_t)>;

RealFn constant_real(const Interval& x);
RealFn decimal_real(const std::string& text);

struct ReductionInstance {
  RealFn gamma;
  RealFn mu;
  RealFn A;
  RealFn B;
  Int M;
};

struct ReductionOptions {
  mpfr_prec_t start_precision = 1024;
  mpfr_prec_t max_precision = 16384;
  std::size_t max_convergents = 64;
};

struct RejectedConvergent {
  std::size_t index = 0;
  Int q;
  std::string epsilon;
};

struct ReductionOutcome {
  Int q;
  Interval epsilon{64};
  Int w_bound;
  std::size_t convergent_index = 0;
  std::vector<RejectedConvergent> attempts;
  mpfr_prec_t precision = 0;

  nlohmann::json to_json() const;
};

/// Finds the first convergent denominator q > 6M of gamma with
/// eps = ||mu q|| - M ||gamma q|| > 0. Then no solution of
/// 0 < u gamma - v + mu < A B^{-w} with 0 <= u <= M has w > w_bound.
ReductionOutcome baker_davenport_reduce(const ReductionInstance& inst, const ReductionOptions& options = {});

/// Brute force over 0 <= u <= min(M, u_limit): true when no u has
/// 0 < u gamma - v + mu < A B^{-(w_bound + 1)} for an integer v.
bool reduction_soundness_check(const ReductionInstance& inst, const ReductionOutcome& outcome, const Int& u_limit,
                               mpfr_prec_t precision = 512);

}  // namespace lucastk
