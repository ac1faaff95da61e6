#include "lucastk/solvers.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lucastk/appearance.hpp"
#include "lucastk/parallel.hpp"
#include "lucastk/primes.hpp"
#include "lucastk/term_factor.hpp"

namespace lucastk {

namespace {

std::string str(long long x) { return std::to_string(x); }

nlohmann::json pair_params(const LucasPair& pair, Side side) {
  auto j = pair.to_json();
  j["side"] = to_string(side);
  return j;
}

void require_limit(long long n_limit, long long cap, const char* what) {
  if (n_limit < 0) throw InvalidArgument(std::string(what) + ": limit must be non-negative");
  if (n_limit > cap)
    throw OutOfValidityRange(std::string(what) + ": limit " + str(n_limit) + " exceeds " + str(cap));
}

// Indices settled by each method, in increasing order.
class DecisionLog {
 public:
  void add(const std::string& method, long long n) { by_method_[method].push_back(str(n)); }
  nlohmann::json to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : by_method_) j[k] = v;
    return j;
  }

 private:
  std::map<std::string, std::vector<std::string>> by_method_;
};

const Effort kQuickEffort{20'000, 100'000};

Int long_value(const nlohmann::json& j, const char* key) { return parse_int(j.at(key).get<std::string>()); }

long long index_value(const nlohmann::json& j, const char* key) {
  Int v = long_value(j, key);
  if (!v.fits_slong_p()) throw InvalidArgument(std::string("index out of range: ") + key);
  return v.get_si();
}

LucasPair pair_from(const nlohmann::json& params) {
  return LucasPair(static_cast<long>(long_value(params, "r").get_si()), static_cast<long>(long_value(params, "s").get_si()));
}

Int repunit_value(const Int& x, unsigned long m) { return (pow_int(x, m) - 1) / (x - 1); }

Int form_value(const Int& x, unsigned long m, PowerForm form) {
  return form == PowerForm::full ? Int(pow_int(x, m) - 1) : repunit_value(x, m);
}

// Exact root n >= 1 of X^n = y, if any.
std::optional<unsigned long> exact_log(const Int& y, const Int& x) {
  if (y < x) return std::nullopt;
  Int t = y;
  unsigned long n = 0;
  while (t % x == 0) {
    t /= x;
    ++n;
  }
  if (t != 1) return std::nullopt;
  return n;
}

}  // namespace

Int RepdigitForm::value() const {
  if (base < 2 || digit < 1 || digit >= base || length < 1) throw InvalidArgument("bad repdigit form");
  return Int(digit) * repunit_value(Int(base), length);
}

std::optional<RepdigitForm> as_repdigit(const Int& x, unsigned base) {
  if (base < 2 || base > 36) throw InvalidArgument("repdigit base must lie in [2, 36]");
  if (sgn(x) <= 0) return std::nullopt;
  std::string digits = x.get_str(static_cast<int>(base));
  if (digits.find_first_not_of(digits[0]) != std::string::npos) return std::nullopt;
  char c = digits[0];
  unsigned d = (c >= '0' && c <= '9') ? static_cast<unsigned>(c - '0') : static_cast<unsigned>(c - 'a' + 10);
  return RepdigitForm{d, digits.size(), base};
}

// ---------------------------------------------------------------------------

SolutionCertificate phi_fixed_point_scan(const LucasPair& pair, long long n_limit, const ScanOptions& options) {
  require_limit(n_limit, 120, "phi_fixed_point_scan");
  struct Row {
    bool complete = false;
    Factorization f;
    Int phi;
    std::optional<long long> m;
  };
  auto rows = parallel_map(static_cast<std::size_t>(n_limit), options.jobs, [&](std::size_t i) {
    long long n = static_cast<long long>(i) + 1;
    Row row;
    row.f = factor_term(pair, n, Side::fundamental, options.effort);
    row.complete = row.f.complete();
    if (row.complete) {
      row.phi = euler_phi(row.f);
      row.m = is_member(pair, row.phi, Side::fundamental);
    }
    return row;
  });

  SolutionCertificate cert;
  cert.equation_id = "phi_fixed_point";
  cert.parameters = pair_params(pair, Side::fundamental);
  cert.search_bound = from_ll(n_limit);
  cert.evidence["factorizations"] = nlohmann::json::object();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    long long n = static_cast<long long>(i) + 1;
    const Row& row = rows[i];
    if (!row.complete) {
      cert.exhaustive = false;
      cert.uncovered.push_back("n=" + str(n));
      continue;
    }
    if (row.m) {
      cert.solutions.push_back({{"n", str(n)}, {"m", str(*row.m)}, {"phi", to_dec(row.phi)}});
      cert.evidence["factorizations"][str(n)] = row.f.to_json();
    }
  }
  cert.notes.push_back("n = 0 skipped: u_0 = 0");
  cert.notes.push_back("m is the least index with u_m = phi(u_n)");
  return cert;
}

SolutionCertificate repdigit_scan(const LucasPair& pair, Side side, long long n_limit, unsigned base) {
  require_limit(n_limit, 100'000, "repdigit_scan");
  if (base < 2 || base > 36) throw InvalidArgument("repdigit base must lie in [2, 36]");
  SolutionCertificate cert;
  cert.equation_id = "repdigit";
  cert.parameters = pair_params(pair, side);
  cert.parameters["base"] = str(base);
  cert.search_bound = from_ll(n_limit);

  // a number above base^6 can only be a repdigit when its last six digits are
  Int window = pow_int(Int(base), 6);
  std::set<unsigned long> tails;
  for (unsigned a = 1; a < base; ++a) tails.insert(Int(a * repunit_value(Int(base), 6)).get_ui());

  std::vector<std::string> zeros;
  Int a = side == Side::fundamental ? Int(0) : Int(2);
  Int b = side == Side::fundamental ? Int(1) : Int(pair.r());
  for (long long n = 0; n <= n_limit; ++n) {
    if (sgn(a) == 0) zeros.push_back(str(n));
    bool candidate = sgn(a) > 0 && (a < window || tails.count(Int(a % window).get_ui()));
    if (candidate) {
      if (auto rep = as_repdigit(a, base)) {
        cert.solutions.push_back(
            {{"n", str(n)}, {"value", to_dec(a)}, {"digit", str(rep->digit)}, {"length", str(static_cast<long long>(rep->length))}});
      }
    }
    Int next = pair.r() * b + pair.s() * a;
    a = b;
    b = next;
  }
  cert.evidence["zero_terms"] = zeros;
  if (!zeros.empty())
    cert.notes.push_back("terms equal to 0 are not repdigits (no digit 1.." + str(base - 1) + " gives 0)");
  return cert;
}

nlohmann::json StructureClauses::to_json() const {
  nlohmann::json j = {{"digit_is_8", digit_is_8},
                      {"length_even", length_even},
                      {"index_is_prime_or_prime_square", index_is_prime_or_prime_square},
                      {"cube_divides_fermat_quotient", cube_divides_fermat_quotient},
                      {"all", all()}};
  if (prime) j["prime"] = to_dec(*prime);
  return j;
}

StructureClauses phi_repdigit_structure(long long n, unsigned digit, unsigned long length) {
  if (n < 1) throw InvalidArgument("index must be positive");
  StructureClauses c;
  c.digit_is_8 = digit == 8;
  c.length_even = length % 2 == 0;
  auto fs = factor_u64(static_cast<std::uint64_t>(n));
  if (fs.size() == 1 && fs[0].second <= 2) {
    c.index_is_prime_or_prime_square = true;
    Int p = from_u64(fs[0].first);
    c.prime = p;
    Int p3 = p * p * p, t;
    mpz_powm(t.get_mpz_t(), Int(10).get_mpz_t(), Int(p - 1).get_mpz_t(), p3.get_mpz_t());
    c.cube_divides_fermat_quotient = t == 1;
  }
  return c;
}

SolutionCertificate phi_repdigit_scan(long long n_limit, const ScanOptions& options) {
  require_limit(n_limit, 1000, "phi_repdigit_scan");
  const LucasPair fib = LucasPair::fibonacci();
  struct Row {
    std::string method;  // empty: undecided
    std::optional<RepdigitForm> rep;
    Int phi;
  };

  auto decide = [&](long long n, const Effort& effort) {
    Row row;
    Factorization f = factor_term(fib, n, Side::companion, effort);
    if (f.complete()) {
      row.method = "complete";
      row.phi = euler_phi(f);
      row.rep = as_repdigit(row.phi);
      return row;
    }
    // a (10^m - 1)/9 has 2-adic valuation at most 3
    if (phi_two_adic_lower_bound(f) >= 4) {
      row.method = "two_adic";
      return row;
    }
    Interval enc = phi_enclosure(f);
    Int lo = enc.floor_lower(), hi = enc.ceil_upper();
    auto digits_lo = lo.get_str().size(), digits_hi = hi.get_str().size();
    bool any = false;
    for (auto m = digits_lo; m <= digits_hi && !any; ++m)
      for (unsigned a = 1; a <= 9 && !any; ++a) {
        Int v = a * repunit_value(Int(10), m);
        if (lo <= v && v <= hi) any = true;
      }
    if (!any) row.method = "enclosure";
    return row;
  };

  auto rows = parallel_map(static_cast<std::size_t>(n_limit + 1), options.jobs, [&](std::size_t i) {
    long long n = static_cast<long long>(i);
    Row row = decide(n, kQuickEffort);
    if (row.method.empty()) row = decide(n, options.effort);
    return row;
  });

  SolutionCertificate cert;
  cert.equation_id = "phi_repdigit";
  cert.parameters = pair_params(fib, Side::companion);
  cert.parameters["base"] = "10";
  cert.search_bound = from_ll(n_limit);
  DecisionLog log;
  nlohmann::json structure = nlohmann::json::object();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    long long n = static_cast<long long>(i);
    const Row& row = rows[i];
    if (row.method.empty()) {
      cert.exhaustive = false;
      cert.uncovered.push_back("n=" + str(n));
      continue;
    }
    log.add(row.method, n);
    if (row.rep) {
      cert.solutions.push_back({{"n", str(n)},
                                {"phi", to_dec(row.phi)},
                                {"digit", str(row.rep->digit)},
                                {"length", str(static_cast<long long>(row.rep->length))}});
      if (n > 6) structure[str(n)] = phi_repdigit_structure(n, row.rep->digit, row.rep->length).to_json();
    }
  }
  cert.evidence["decisions"] = log.to_json();
  cert.evidence["structure"] = structure;
  cert.notes.push_back("two_adic: nu_2(phi) >= 4 exceeds nu_2 of every repdigit");
  cert.notes.push_back("enclosure: no repdigit lies in the certified range of phi");
  return cert;
}

// ---------------------------------------------------------------------------

std::string to_string(PowerForm form) { return form == PowerForm::full ? "full" : "repunit"; }

PowerForm parse_power_form(const std::string& text) {
  if (text == "full") return PowerForm::full;
  if (text == "repunit") return PowerForm::repunit;
  throw InvalidArgument("unknown form: " + text);
}

SolutionCertificate phi_power_form_scan(long x_min, long x_max, unsigned long m_limit, unsigned long n_limit,
                                        PowerForm form, const ScanOptions& options) {
  if (x_min < 2 || x_max < x_min) throw InvalidArgument("need 2 <= x_min <= x_max");
  if (m_limit > 400) throw OutOfValidityRange("m_limit exceeds 400");
  struct Row {
    bool complete = false;
    Int phi;
    std::vector<Int> support;
    std::optional<unsigned long> n;
  };
  const std::size_t width = m_limit;
  const std::size_t count = static_cast<std::size_t>(x_max - x_min + 1) * width;
  auto rows = parallel_map(count, options.jobs, [&](std::size_t i) {
    long x = x_min + static_cast<long>(i / width);
    unsigned long m = i % width + 1;
    // (X^m - 1)/(X - 1) is u_m of the pair (X + 1, -X), factored through its primitive parts
    Factorization f = factor_term(LucasPair::repunit(x), static_cast<long long>(m), Side::fundamental, options.effort);
    if (form == PowerForm::full) f = combine({f, factor(Int(x - 1))});
    Row row;
    row.complete = f.complete();
    if (!row.complete) return row;
    row.phi = euler_phi(f);
    for (const auto& pp : f.factors()) row.support.push_back(pp.prime);
    Int target = form == PowerForm::full ? Int(row.phi + 1) : Int(row.phi * (x - 1) + 1);
    row.n = exact_log(target, Int(x));
    if (row.n && *row.n > n_limit) row.n.reset();
    return row;
  });

  SolutionCertificate cert;
  cert.equation_id = "phi_power_form";
  cert.parameters = {{"x_min", str(x_min)},   {"x_max", str(x_max)}, {"m_limit", str(static_cast<long long>(m_limit))},
                     {"n_limit", str(static_cast<long long>(n_limit))}, {"form", to_string(form)}};
  cert.search_bound = static_cast<unsigned long>(m_limit);
  cert.evidence["prime_support"] = nlohmann::json::object();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    long x = x_min + static_cast<long>(i / width);
    unsigned long m = i % width + 1;
    const std::string key = "X=" + str(x) + ",m=" + str(static_cast<long long>(m));
    if (!rows[i].complete) {
      cert.exhaustive = false;
      cert.uncovered.push_back(key);
      continue;
    }
    std::vector<std::string> support;
    for (const auto& p : rows[i].support) support.push_back(to_dec(p));
    cert.evidence["prime_support"][key] = support;
    if (rows[i].n)
      cert.solutions.push_back({{"x", str(x)},
                                {"m", str(static_cast<long long>(m))},
                                {"n", str(static_cast<long long>(*rows[i].n))},
                                {"phi", to_dec(rows[i].phi)}});
  }
  return cert;
}

SolutionCertificate ljunggren_check(long x_limit, long n_limit) {
  if (x_limit > 1000 || n_limit > 1000) throw OutOfValidityRange("ljunggren_check: limits must be at most 1000");
  SolutionCertificate cert;
  cert.equation_id = "ljunggren";
  cert.parameters = {{"x_limit", str(x_limit)}, {"n_limit", str(n_limit)}};
  cert.search_bound = Int(x_limit);
  for (long x = 2; x <= x_limit; ++x) {
    Int value = 1 + x;  // n = 2
    for (long n = 3; n <= n_limit; ++n) {
      value = value * x + 1;
      if (is_square(value))
        cert.solutions.push_back({{"x", str(x)}, {"n", str(n)}, {"y", to_dec(isqrt(value))}});
    }
  }
  return cert;
}

SolutionCertificate base5_q_set_scan(long q_limit, const ScanOptions& options) {
  if (q_limit > 200) throw OutOfValidityRange("base5_q_set_scan: q_limit exceeds 200");
  std::vector<std::uint64_t> qs = q_limit >= 3 ? primes_in_range(3, static_cast<std::uint64_t>(q_limit))
                                               : std::vector<std::uint64_t>{};
  struct Row {
    bool complete = false;
    std::optional<Int> witness;
  };
  auto rows = parallel_map(qs.size(), options.jobs, [&](std::size_t i) {
    Factorization f = factor_term(LucasPair::repunit(5), static_cast<long long>(qs[i]), Side::fundamental, options.effort);
    Row row;
    row.complete = f.complete();
    for (const auto& pp : f.factors())
      if (pp.prime % 5 == 1) {
        row.witness = pp.prime;
        break;
      }
    return row;
  });
  SolutionCertificate cert;
  cert.equation_id = "base5_q_set";
  cert.parameters = {{"q_limit", str(q_limit)}};
  cert.search_bound = Int(q_limit);
  cert.evidence["witnesses"] = nlohmann::json::object();
  for (std::size_t i = 0; i < qs.size(); ++i) {
    std::string q = std::to_string(qs[i]);
    if (rows[i].witness) {
      cert.evidence["witnesses"][q] = to_dec(*rows[i].witness);
    } else if (rows[i].complete) {
      cert.solutions.push_back({{"q", q}});
    } else {
      cert.exhaustive = false;
      cert.uncovered.push_back("q=" + q);
    }
  }
  return cert;
}

// ---------------------------------------------------------------------------

namespace {

bool wieferich_test(std::uint64_t base, std::uint64_t p, unsigned k) {
  u128 pk = 1;
  bool small = true;
  for (unsigned i = 0; i < k; ++i) {
    pk *= p;
    if (pk >> 64) {
      small = false;
      break;
    }
  }
  if (small) {
    auto m = static_cast<std::uint64_t>(pk);
    return powmod_u64(base % m, p - 1, m) == 1 % m;
  }
  Int mod = pow_int(from_u64(p), k), t;
  mpz_powm(t.get_mpz_t(), from_u64(base).get_mpz_t(), from_u64(p - 1).get_mpz_t(), mod.get_mpz_t());
  return t == 1;
}

}  // namespace

std::vector<std::uint64_t> wieferich_scan(std::uint64_t base, std::uint64_t p_limit, unsigned k, unsigned jobs) {
  if (base < 2) throw InvalidArgument("base must be at least 2");
  if (k < 1) throw InvalidArgument("power must be at least 1");
  if (p_limit > 2'000'000'000ULL) throw OutOfValidityRange("p_limit exceeds 2e9");
  constexpr std::uint64_t kSegment = 1ULL << 22;
  std::size_t segments = static_cast<std::size_t>(p_limit / kSegment + 1);
  auto parts = parallel_map(segments, jobs, [&](std::size_t i) {
    std::vector<std::uint64_t> hits;
    std::uint64_t lo = std::max<std::uint64_t>(3, i * kSegment);
    std::uint64_t hi = std::min(p_limit, (i + 1) * kSegment - 1);
    if (lo > hi) return hits;
    for (auto p : primes_in_range(lo, hi))
      if (base % p != 0 && wieferich_test(base, p, k)) hits.push_back(p);
    return hits;
  });
  std::vector<std::uint64_t> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

SolutionCertificate wieferich_certificate(std::uint64_t base, std::uint64_t p_limit, unsigned k, unsigned jobs) {
  SolutionCertificate cert;
  cert.equation_id = "wieferich";
  cert.parameters = {{"base", std::to_string(base)}, {"k", std::to_string(k)}, {"p_limit", std::to_string(p_limit)}};
  cert.search_bound = from_u64(p_limit);
  for (auto p : wieferich_scan(base, p_limit, k, jobs)) cert.solutions.push_back({{"p", std::to_string(p)}});
  cert.notes.push_back("odd primes not dividing the base");
  return cert;
}

std::vector<ExponentException> pell_exponent_exception_scan(std::uint64_t r_limit, unsigned jobs) {
  if (r_limit > 10'000'000ULL) throw OutOfValidityRange("r_limit exceeds 1e7");
  const LucasPair pell = LucasPair::pell();
  std::vector<std::uint64_t> primes = r_limit >= 3 ? primes_in_range(3, r_limit) : std::vector<std::uint64_t>{};
  auto flags = parallel_map(primes.size(), jobs, [&](std::size_t i) {
    std::uint64_t r = primes[i];
    // z(r) divides r - (2/r) with cofactor prime to r, so nu_r(u_{r - (2/r)}) = e_r
    std::uint64_t rm = r % 8;
    std::uint64_t idx = (rm == 1 || rm == 7) ? r - 1 : r + 1;
    return term_mod_u64(pell, idx, r * r).first == 0;
  });
  std::vector<ExponentException> out;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (!flags[i]) continue;
    Int p = from_u64(primes[i]);
    Int z = order_of_appearance_z(pell, p);
    out.push_back({primes[i], appearance_exponent(pell, p, z)});
  }
  return out;
}

SolutionCertificate pell_exponent_exception_certificate(std::uint64_t r_limit, unsigned jobs) {
  SolutionCertificate cert;
  cert.equation_id = "pell_exponent_exception";
  cert.parameters = LucasPair::pell().to_json();
  cert.parameters["r_limit"] = std::to_string(r_limit);
  cert.search_bound = from_u64(r_limit);
  for (auto& e : pell_exponent_exception_scan(r_limit, jobs))
    cert.solutions.push_back({{"r", std::to_string(e.prime)}, {"e", std::to_string(e.exponent)}});
  cert.notes.push_back("r = 2 has e_2 = 1 (u_2 = 2)");
  return cert;
}

// ---------------------------------------------------------------------------

SolutionCertificate lehmer_scan(const LucasPair& pair, Side side, long long n_limit, const ScanOptions& options) {
  require_limit(n_limit, 1000, "lehmer_scan");
  struct Row {
    std::string method;
    bool lehmer = false;
  };
  auto decide = [&](long long n, const Int& N, const Effort& effort) {
    Row row;
    Factorization f = factor_term(pair, n, side, effort);
    if (auto w = lehmer_refutation(N, f)) {
      row.method = to_string(w->kind);
      return row;
    }
    if (f.complete()) {
      row.method = "complete";
      row.lehmer = lehmer_property(N, f);
    }
    return row;
  };
  auto rows = parallel_map(static_cast<std::size_t>(n_limit + 1), options.jobs, [&](std::size_t i) {
    long long n = static_cast<long long>(i);
    Int N = abs(term(pair, n).on(side));
    if (N < 4) return Row{"not_composite", false};
    Row row = decide(n, N, kQuickEffort);
    if (row.method.empty()) row = decide(n, N, options.effort);
    return row;
  });

  SolutionCertificate cert;
  cert.equation_id = "lehmer";
  cert.parameters = pair_params(pair, side);
  cert.search_bound = from_ll(n_limit);
  DecisionLog log;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    long long n = static_cast<long long>(i);
    if (rows[i].method.empty()) {
      cert.exhaustive = false;
      cert.uncovered.push_back("n=" + str(n));
      continue;
    }
    log.add(rows[i].method, n);
    if (rows[i].lehmer) cert.solutions.push_back({{"n", str(n)}, {"value", to_dec(Int(abs(term(pair, n).on(side))))}});
  }
  cert.evidence["decisions"] = log.to_json();
  return cert;
}

SolutionCertificate square_product_scan(const LucasPair& pair, Side side, long long n_limit) {
  require_limit(n_limit, 100, "square_product_scan");
  auto ts = terms_upto(pair, static_cast<std::size_t>(n_limit + 1));
  SolutionCertificate cert;
  cert.equation_id = "square_product";
  cert.parameters = pair_params(pair, side);
  cert.search_bound = from_ll(n_limit);
  for (long long n = 1; n <= n_limit; ++n)
    for (long long m = 0; m < n; ++m) {
      const Int& a = ts[static_cast<std::size_t>(m)].on(side);
      const Int& b = ts[static_cast<std::size_t>(n)].on(side);
      if (sgn(a) == 0 || sgn(b) == 0) continue;
      Int prod = a * b;
      if (sgn(prod) > 0 && is_square(prod))
        cert.solutions.push_back({{"m", str(m)}, {"n", str(n)}, {"y", to_dec(isqrt(prod))}});
    }
  if (side == Side::fundamental) cert.notes.push_back("products with u_0 = 0 skipped");
  return cert;
}

SolutionCertificate perfect_power_scan(const LucasPair& pair, Side side, long long n_limit) {
  require_limit(n_limit, 500, "perfect_power_scan");
  auto ts = terms_upto(pair, static_cast<std::size_t>(n_limit + 1));
  SolutionCertificate cert;
  cert.equation_id = "perfect_power";
  cert.parameters = pair_params(pair, side);
  cert.search_bound = from_ll(n_limit);
  for (long long n = 0; n <= n_limit; ++n) {
    const Int& x = ts[static_cast<std::size_t>(n)].on(side);
    if (sgn(x) < 0) continue;
    if (x <= 1) {
      cert.solutions.push_back({{"n", str(n)}, {"y", to_dec(x)}, {"k", "any"}});
      continue;
    }
    if (auto pp = perfect_power(x))
      cert.solutions.push_back({{"n", str(n)}, {"y", to_dec(pp->root)}, {"k", str(static_cast<long long>(pp->exponent))}});
  }
  cert.notes.push_back("k is the largest exponent; 0 and 1 are powers of every order");
  cert.notes.push_back("negative terms skipped");
  return cert;
}

// ---------------------------------------------------------------------------

namespace {

bool replay_solutions(const nlohmann::json& c) {
  const std::string id = c.at("equation_id").get<std::string>();
  const auto& params = c.at("parameters");
  for (const auto& s : c.at("solutions")) {
    bool ok = false;
    if (id == "phi_fixed_point") {
      LucasPair pair = pair_from(params);
      Int un = term(pair, index_value(s, "n")).u, um = term(pair, index_value(s, "m")).u;
      ok = euler_phi(factor(un)) == um && um == long_value(s, "phi");
    } else if (id == "repdigit") {
      LucasPair pair = pair_from(params);
      Side side = parse_side(params.at("side").get<std::string>());
      Int v = term(pair, index_value(s, "n")).on(side);
      auto base = static_cast<unsigned>(index_value(params, "base"));
      RepdigitForm f{static_cast<unsigned>(index_value(s, "digit")), static_cast<unsigned long>(index_value(s, "length")), base};
      ok = v == f.value() && v == long_value(s, "value");
    } else if (id == "phi_repdigit") {
      Int v = term(LucasPair::fibonacci(), index_value(s, "n")).v;
      RepdigitForm f{static_cast<unsigned>(index_value(s, "digit")), static_cast<unsigned long>(index_value(s, "length")), 10};
      ok = euler_phi(factor(v)) == f.value();
    } else if (id == "phi_power_form") {
      Int x = long_value(s, "x");
      auto m = static_cast<unsigned long>(index_value(s, "m")), n = static_cast<unsigned long>(index_value(s, "n"));
      PowerForm form = parse_power_form(params.at("form").get<std::string>());
      ok = euler_phi(factor(form_value(x, m, form))) == form_value(x, n, form);
    } else if (id == "ljunggren") {
      Int x = long_value(s, "x"), y = long_value(s, "y");
      ok = repunit_value(x, static_cast<unsigned long>(index_value(s, "n"))) == y * y;
    } else if (id == "base5_q_set") {
      Int q = long_value(s, "q");
      Factorization f = factor(Int(pow_int(Int(5), q.get_ui()) - 1));
      ok = std::none_of(f.factors().begin(), f.factors().end(), [](const PrimePower& pp) { return pp.prime % 5 == 1; });
    } else if (id == "wieferich") {
      Int p = long_value(s, "p"), b = long_value(params, "base");
      auto k = static_cast<unsigned long>(index_value(params, "k"));
      Int pk = pow_int(p, k), t;
      mpz_powm(t.get_mpz_t(), b.get_mpz_t(), Int(p - 1).get_mpz_t(), pk.get_mpz_t());
      ok = is_probable_prime(p) && b % p != 0 && t == 1 % pk;
    } else if (id == "pell_exponent_exception") {
      Int r = long_value(s, "r");
      LucasPair pell = LucasPair::pell();
      Int z = order_of_appearance_z(pell, r);
      ok = z.fits_slong_p() && valuation(r, term(pell, z.get_si()).u) == index_value(s, "e");
    } else if (id == "lehmer") {
      LucasPair pair = pair_from(params);
      Side side = parse_side(params.at("side").get<std::string>());
      Int v = abs(term(pair, index_value(s, "n")).on(side));
      ok = lehmer_property(v, factor(v));
    } else if (id == "square_product") {
      LucasPair pair = pair_from(params);
      Side side = parse_side(params.at("side").get<std::string>());
      Int y = long_value(s, "y");
      ok = term(pair, index_value(s, "m")).on(side) * term(pair, index_value(s, "n")).on(side) == y * y;
    } else if (id == "perfect_power") {
      LucasPair pair = pair_from(params);
      Side side = parse_side(params.at("side").get<std::string>());
      Int v = term(pair, index_value(s, "n")).on(side), y = long_value(s, "y");
      std::string k = s.at("k").get<std::string>();
      ok = k == "any" ? (v == y && v <= 1 && sgn(v) >= 0)
                      : v == pow_int(y, static_cast<unsigned long>(parse_int(k).get_ui()));
    } else {
      throw InvalidArgument("unknown equation id: " + id);
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace

bool replay_certificate(const nlohmann::json& c) {
  try {
    return replay_solutions(c);
  } catch (const nlohmann::json::exception&) {
    return false;  // malformed solution entry
  }
}

}  // namespace lucastk
