#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "lucastk/solvers.hpp"

namespace lucastk {

namespace {

const std::set<unsigned> kSupported{3, 5, 7, 8, 16};

// Residues of the chosen sequence mod m from index 0 through the end of the
// first full cycle.
std::vector<std::uint64_t> orbit(const LucasPair& pair, Side side, std::uint64_t m, std::uint64_t& preperiod,
                                  std::uint64_t& period) {
  PeriodInfo info = period_mod(pair, m);
  preperiod = info.preperiod;
  period = info.period;
  const std::uint64_t r = reduce_signed(pair.r(), m), s = reduce_signed(pair.s(), m);
  std::uint64_t a = side == Side::fundamental ? 0 : 2 % m;
  std::uint64_t b = side == Side::fundamental ? 1 % m : r;
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < preperiod + period; ++i) {
    out.push_back(a);
    std::uint64_t next = (r * b + s * a) % m;
    a = b;
    b = next;
  }
  return out;
}

// The state period can be a multiple of the period of a single sequence.
std::uint64_t minimal_period(const std::vector<std::uint64_t>& seq, std::uint64_t pre, std::uint64_t period) {
  for (std::uint64_t d = 1; d < period; ++d) {
    if (period % d) continue;
    bool ok = true;
    for (std::uint64_t i = pre; i < pre + period && ok; ++i) ok = seq[i] == seq[pre + (i - pre) % d];
    if (ok) return d;
  }
  return period;
}

// { a (10^m - 1)/9 mod L : m >= min_length }
std::set<std::uint64_t> repdigit_residues(unsigned digit, unsigned long min_length, std::uint64_t L) {
  std::uint64_t rep = 0;
  for (unsigned long i = 0; i < min_length; ++i) rep = (rep * 10 + 1) % L;
  std::set<std::uint64_t> seen, out;
  while (seen.insert(rep).second) {
    out.insert(digit * rep % L);
    rep = (rep * 10 + 1) % L;
  }
  return out;
}

std::string join(const std::vector<std::uint64_t>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ", " : "") << xs[i];
  return os.str();
}

}  // namespace

std::string DigitVerdict::verdict() const {
  if (eliminating_moduli.empty()) return "not eliminated";
  std::ostringstream os;
  if (eliminating_moduli.size() == 1) {
    os << "eliminated by modulus " << eliminating_moduli[0];
  } else {
    os << "eliminated by moduli {";
    for (std::size_t i = 0; i < eliminating_moduli.size(); ++i) os << (i ? ", " : "") << eliminating_moduli[i];
    os << "}";
  }
  return os.str();
}

nlohmann::json EliminationTrace::to_json() const {
  nlohmann::json j;
  j["side"] = to_string(side);
  j["min_length"] = std::to_string(min_length);
  j["moduli"] = nlohmann::json::array();
  for (const auto& m : moduli) {
    std::vector<std::string> cyc;
    for (auto x : m.cycle) cyc.push_back(std::to_string(x));
    j["moduli"].push_back({{"modulus", std::to_string(m.modulus)},
                           {"period", std::to_string(m.period)},
                           {"cycle", cyc},
                           {"residue_line", m.residue_line}});
  }
  j["digits"] = nlohmann::json::array();
  for (const auto& d : digits) {
    nlohmann::json targets = nlohmann::json::object();
    for (const auto& [mod, res] : d.target_residues) {
      std::vector<std::string> rs;
      for (auto x : res) rs.push_back(std::to_string(x));
      targets[std::to_string(mod)] = rs;
    }
    std::vector<std::string> elim;
    for (auto m : d.eliminating_moduli) elim.push_back(std::to_string(m));
    j["digits"].push_back({{"digit", std::to_string(d.digit)},
                           {"verdict", d.verdict()},
                           {"eliminating_moduli", elim},
                           {"target_residues", targets}});
  }
  return j;
}

EliminationTrace modular_elimination_trace(const LucasPair& pair, Side side, const std::vector<unsigned>& digits,
                                           const std::vector<unsigned>& moduli, unsigned long min_length) {
  if (moduli.empty()) throw InvalidArgument("at least one modulus is required");
  for (auto m : moduli)
    if (!kSupported.count(m)) throw UnsupportedModulus("modulus " + std::to_string(m) + " is not one of 3, 5, 7, 8, 16");
  for (auto a : digits)
    if (a < 1 || a > 9) throw InvalidArgument("digit must lie in 1..9");
  if (min_length < 1) throw InvalidArgument("min_length must be positive");

  EliminationTrace trace;
  trace.side = side;
  trace.min_length = min_length;
  for (auto m : moduli) {
    std::uint64_t pre = 0, period = 0;
    auto seq = orbit(pair, side, m, pre, period);
    std::uint64_t p = minimal_period(seq, pre, period);
    ModulusTrace mt;
    mt.modulus = m;
    mt.period = p;
    mt.cycle.assign(seq.begin() + static_cast<long>(pre), seq.begin() + static_cast<long>(pre + p));
    std::vector<std::uint64_t> line(seq.begin(), seq.begin() + static_cast<long>(pre + p));
    for (std::uint64_t i = 0; i < 2; ++i) line.push_back(mt.cycle[i % p]);
    mt.residue_line = join(line);
    trace.moduli.push_back(std::move(mt));
  }

  // subsets ordered by size, then lexicographically by position in `moduli`
  const std::size_t k = moduli.size();
  std::vector<std::vector<unsigned>> subsets;
  for (std::size_t size = 1; size <= k; ++size) {
    std::vector<bool> pick(k, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(size), true);
    do {
      std::vector<unsigned> s;
      for (std::size_t i = 0; i < k; ++i)
        if (pick[i]) s.push_back(moduli[i]);
      subsets.push_back(s);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }

  for (auto a : digits) {
    DigitVerdict v;
    v.digit = a;
    for (auto m : moduli) {
      auto rs = repdigit_residues(a, min_length, m);
      v.target_residues.emplace_back(m, std::vector<std::uint64_t>(rs.begin(), rs.end()));
    }
    for (const auto& s : subsets) {
      std::uint64_t L = 1;
      for (auto m : s) L = std::lcm(L, static_cast<std::uint64_t>(m));
      std::uint64_t pre = 0, period = 0;
      auto seq = orbit(pair, side, L, pre, period);
      std::set<std::uint64_t> values(seq.begin(), seq.end());
      auto targets = repdigit_residues(a, min_length, L);
      bool hit = std::any_of(targets.begin(), targets.end(), [&](auto t) { return values.count(t) > 0; });
      if (!hit) {
        v.eliminating_moduli = s;
        break;
      }
    }
    trace.digits.push_back(std::move(v));
  }
  return trace;
}

}  // namespace lucastk
