#include "lucastk/cfrac.hpp"

namespace lucastk {

CFExpansion cf_expand(const Interval& x, std::size_t max_quotients) {
  CFExpansion out;
  Interval y = x;
  while (out.quotients.size() < max_quotients) {
    Int a = y.floor_lower();
    if (a != y.floor_upper()) break;
    out.quotients.push_back(a);
    Interval frac = y - Interval::from_int(a, y.precision());
    if (frac.is_point() && mpfr_zero_p(frac.lower().get())) {
      out.terminated = true;
      break;
    }
    if (frac.contains_zero()) break;
    y = Interval::from_long(1, y.precision()) / frac;
  }
  if (out.quotients.empty() && max_quotients > 0) {
    throw EnclosureTooWide("enclosure too wide to certify the integer part");
  }
  out.certified_count = out.quotients.size();
  return out;
}

CFExpansion cf_expand(const Rational& x, std::size_t max_quotients) {
  CFExpansion out;
  Int num = x.get_num(), den = x.get_den();
  while (out.quotients.size() < max_quotients && sgn(den) != 0) {
    Int a, r;
    mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    out.quotients.push_back(a);
    num = den;
    den = r;
  }
  out.terminated = sgn(den) == 0;
  out.certified_count = out.quotients.size();
  return out;
}

std::vector<Convergent> convergents(const std::vector<Int>& quotients) {
  std::vector<Convergent> out;
  out.reserve(quotients.size());
  Int p_prev = 1, q_prev = 0, p_prev2 = 0, q_prev2 = 1;
  for (const auto& a : quotients) {
    Int p = a * p_prev + p_prev2;
    Int q = a * q_prev + q_prev2;
    out.push_back({p, q});
    p_prev2 = std::move(p_prev);
    q_prev2 = std::move(q_prev);
    p_prev = std::move(p);
    q_prev = std::move(q);
  }
  return out;
}

std::vector<Convergent> convergents(const CFExpansion& cf) { return convergents(cf.quotients); }

Interval nearest_int_distance(const Interval& x) {
  auto half = Interval::from_rational(Rational(1, 2), x.precision());
  auto shifted = x + half;
  Int k = shifted.floor_lower();
  if (k != shifted.floor_upper()) throw AmbiguousHalfway("enclosure meets a half-integer");
  return abs(x - Interval::from_int(k, x.precision()));
}

RealFn constant_real(const Interval& x) {
  return [x](mpfr_prec_t) { return x; };
}

RealFn decimal_real(const std::string& text) {
  return [text](mpfr_prec_t p) { return Interval::from_decimal(text, p); };
}

nlohmann::json ReductionOutcome::to_json() const {
  nlohmann::json rejected = nlohmann::json::array();
  for (const auto& r : attempts) {
    rejected.push_back({{"index", std::to_string(r.index)}, {"q", to_dec(r.q)}, {"epsilon", r.epsilon}});
  }
  return {{"q", to_dec(q)},
          {"epsilon", epsilon.to_sci(20)},
          {"epsilon_lower", epsilon.lower().to_sci(20, MPFR_RNDD)},
          {"w_bound", to_dec(w_bound)},
          {"convergent_index", std::to_string(convergent_index)},
          {"rejected", rejected},
          {"precision_bits", std::to_string(precision)}};
}

ReductionOutcome baker_davenport_reduce(const ReductionInstance& inst, const ReductionOptions& options) {
  if (inst.M < 1) throw InvalidArgument("M must be at least 1");
  const Int six_m = 6 * inst.M;
  for (mpfr_prec_t prec = options.start_precision; prec <= options.max_precision; prec *= 2) {
    const auto gamma = inst.gamma(prec);
    const auto mu = inst.mu(prec);
    const auto A = inst.A(prec);
    const auto B = inst.B(prec);
    if (!A.is_positive()) throw InvalidArgument("A must be positive");
    if (!B.certainly_greater(Interval::from_long(1, prec))) throw InvalidArgument("B must exceed 1");
    CFExpansion cf;
    try {
      cf = cf_expand(gamma, 100000);
    } catch (const EnclosureTooWide&) {
      continue;
    }
    if (cf.terminated) throw InvalidArgument("gamma is rational");
    const auto conv = convergents(cf);
    const auto m_interval = Interval::from_int(inst.M, prec);
    ReductionOutcome out;
    std::size_t tried = 0;
    for (std::size_t j = 0; j < conv.size(); ++j) {
      if (conv[j].q <= six_m) continue;
      if (++tried > options.max_convergents) {
        throw NoPositiveEpsilon("no convergent with positive epsilon among " +
                                std::to_string(options.max_convergents));
      }
      const auto qi = Interval::from_int(conv[j].q, prec);
      Interval eps(prec);
      try {
        eps = nearest_int_distance(mu * qi) - m_interval * nearest_int_distance(gamma * qi);
      } catch (const AmbiguousHalfway&) {
        break;
      }
      if (eps.is_positive()) {
        out.q = conv[j].q;
        out.epsilon = eps;
        out.convergent_index = j;
        out.precision = prec;
        auto bound = log(A * qi / eps) / log(B);
        out.w_bound = bound.ceil_upper() - 1;
        if (sgn(out.w_bound) < 0) out.w_bound = 0;
        return out;
      }
      if (eps.contains_zero()) {
        break;
      }
      out.attempts.push_back({j, conv[j].q, eps.to_sci(6)});
    }
  }
  throw PrecisionExhausted("could not certify a reduction up to " + std::to_string(options.max_precision) + " bits");
}

bool reduction_soundness_check(const ReductionInstance& inst, const ReductionOutcome& outcome, const Int& u_limit,
                               mpfr_prec_t precision) {
  const auto gamma = inst.gamma(precision);
  const auto mu = inst.mu(precision);
  const auto threshold = inst.A(precision) / pow(inst.B(precision), Int(outcome.w_bound + 1).get_ui());
  const Int top = inst.M < u_limit ? inst.M : u_limit;
  for (Int u = 0; u <= top; ++u) {
    auto x = Interval::from_int(u, precision) * gamma + mu;
    Int v = x.floor_lower();
    if (v != x.floor_upper()) return false;
    auto frac = x - Interval::from_int(v, precision);
    if (frac.is_positive() && !threshold.certainly_less(frac)) return false;
  }
  return true;
}

}  // namespace lucastk
