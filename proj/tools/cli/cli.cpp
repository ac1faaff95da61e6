#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "expr.hpp"
#include "lucastk/appearance.hpp"
#include "lucastk/cfrac.hpp"
#include "lucastk/linforms.hpp"
#include "lucastk/lucas.hpp"
#include "lucastk/parallel.hpp"
#include "lucastk/primes.hpp"
#include "lucastk/solvers.hpp"

namespace lucastk::cli {

namespace {

struct RunConfig {
  std::string pair = "pell";
  std::string side;
  std::string limit;
  int precision = 1024;
  std::uint64_t effort = 2'000'000;
  unsigned jobs = default_jobs();
  std::string format = "json";
  std::string out;
};

struct Output {
  nlohmann::json body;
  bool budget_exhausted = false;
};

using Handler = std::function<Output()>;

PairSpec pair_of(const RunConfig& cfg) {
  PairSpec spec = parse_pair(cfg.pair);
  if (!cfg.side.empty()) spec.side = parse_side(cfg.side);
  return spec;
}

long long limit_of(const RunConfig& cfg, long long fallback) {
  if (cfg.limit.empty()) return fallback;
  Int v = parse_integer_expr(cfg.limit);
  if (sgn(v) < 0 || !v.fits_slong_p()) throw InvalidArgument("limit out of range: " + cfg.limit);
  return v.get_si();
}

ScanOptions scan_options(const RunConfig& cfg) {
  ScanOptions o;
  o.effort.rho_iterations = cfg.effort;
  o.jobs = cfg.jobs;
  return o;
}

std::vector<std::uint64_t> parse_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    Int v = parse_int(item);
    if (sgn(v) < 0 || !fits_u64(v)) throw InvalidArgument("bad list entry: " + item);
    out.push_back(to_u64(v));
  }
  return out;
}

Output certificate(const SolutionCertificate& c) { return {c.to_json(), !c.exhaustive}; }

nlohmann::json period_json(const PeriodInfo& info, const PairSpec& spec) {
  auto strs = [](const std::vector<std::uint64_t>& xs) {
    std::vector<std::string> out;
    for (auto x : xs) out.push_back(std::to_string(x));
    return out;
  };
  return {{"pair", spec.pair.to_json()},
          {"modulus", std::to_string(info.modulus)},
          {"period", std::to_string(info.period)},
          {"preperiod", std::to_string(info.preperiod)},
          {"u_cycle", strs(info.u_cycle)},
          {"v_cycle", strs(info.v_cycle)}};
}

void add_common(CLI::App* app, RunConfig& cfg, bool with_pair, bool with_limit) {
  if (with_pair) {
    app->add_option("--pair", cfg.pair, "fibonacci, lucas, pell, pell-lucas or custom:r,s");
    app->add_option("--side", cfg.side, "u or v (defaults from the pair name)");
  }
  if (with_limit) app->add_option("--limit", cfg.limit, "upper end of the search range");
  app->add_option("--precision", cfg.precision, "working precision in bits")->check(CLI::Range(64, 16384));
  app->add_option("--effort", cfg.effort, "rho iteration budget per factorization");
  app->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  app->add_option("--format", cfg.format, "json or csv-summary")->check(CLI::IsMember({"json", "csv-summary"}));
  app->add_option("--out", cfg.out, "write the result here instead of standard output");
}

std::string scalar_cell(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

// Arrays of scalars or of flat objects are spelled out ("n=1 m=1;n=2 m=1"),
// anything deeper is summarised by its size.
std::string csv_cell(const nlohmann::json& v) {
  if (!v.is_array()) return v.is_object() ? std::to_string(v.size()) : scalar_cell(v);
  std::string out;
  for (const auto& item : v) {
    std::string part;
    if (item.is_object()) {
      for (const auto& [k, x] : item.items()) {
        if (x.is_structured()) return std::to_string(v.size());
        part += (part.empty() ? "" : " ") + k + "=" + scalar_cell(x);
      }
    } else if (item.is_array()) {
      return std::to_string(v.size());
    } else {
      part = scalar_cell(item);
    }
    out += (out.empty() ? "" : ";") + part;
  }
  return out;
}

std::string render(const nlohmann::json& body, const std::string& format) {
  if (format == "json") return canonical_dump(body);
  // one header line and one value line over the top-level keys
  std::string head, row;
  auto emit = [&](const nlohmann::json& obj) {
    for (const auto& [k, v] : obj.items()) {
      head += (head.empty() ? "" : ",") + k;
      std::string cell = csv_cell(v);
      if (cell.find_first_of(",\"\n") != std::string::npos) {
        std::string quoted = "\"";
        for (char c : cell) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
        cell = quoted + "\"";
      }
      row += (row.empty() ? "" : ",") + cell;
    }
  };
  if (body.is_object()) {
    emit(body);
  } else if (body.is_array()) {
    std::string out;
    for (const auto& item : body) {
      head.clear();
      row.clear();
      emit(item);
      if (out.empty()) out = head + "\n";
      out += row + "\n";
    }
    return out;
  }
  return head + "\n" + row + "\n";
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lucas sequences, arithmetic functions and certified Diophantine searches", "lucastk"};
  app.require_subcommand(1);
  RunConfig cfg;
  Handler handler;
  std::string verify_dir;

  auto on = [&](CLI::App* sub, Handler h) { sub->callback([&handler, h] { handler = h; }); };

  // term
  long long term_n = 0;
  auto* term_cmd = app.add_subcommand("term", "u_n and v_n of a pair");
  term_cmd->add_option("--n", term_n, "index")->required();
  add_common(term_cmd, cfg, true, false);
  on(term_cmd, [&] {
    auto spec = pair_of(cfg);
    auto t = term(spec.pair, term_n);
    return Output{{{"pair", spec.pair.to_json()},
                   {"side", to_string(spec.side)},
                   {"n", std::to_string(term_n)},
                   {"value", to_dec(t.on(spec.side))},
                   {"probable_prime", is_probable_prime(abs(t.on(spec.side)))},
                   {"u", to_dec(t.u)},
                   {"v", to_dec(t.v)}}};
  });

  // period
  std::uint64_t modulus = 0;
  auto* period_cmd = app.add_subcommand("period", "period of a pair modulo m");
  period_cmd->add_option("--modulus,-m", modulus, "modulus")->required();
  add_common(period_cmd, cfg, true, false);
  on(period_cmd, [&] {
    auto spec = pair_of(cfg);
    return Output{period_json(period_mod(spec.pair, modulus), spec)};
  });

  // eliminate
  std::string digits = "1,2,3,4,5,6,7,8,9", moduli;
  unsigned long min_length = 1;
  auto* elim_cmd = app.add_subcommand("eliminate", "modular elimination of repdigit values");
  elim_cmd->add_option("--digits", digits, "comma separated digits");
  elim_cmd->add_option("--moduli", moduli, "comma separated moduli from 3, 5, 7, 8, 16")->required();
  elim_cmd->add_option("--min-length", min_length, "least number of repeated digits");
  add_common(elim_cmd, cfg, true, false);
  on(elim_cmd, [&] {
    auto spec = pair_of(cfg);
    std::vector<unsigned> ds, ms;
    for (auto d : parse_list(digits)) ds.push_back(static_cast<unsigned>(d));
    for (auto m : parse_list(moduli)) ms.push_back(static_cast<unsigned>(m));
    return Output{modular_elimination_trace(spec.pair, spec.side, ds, ms, min_length).to_json()};
  });

  // zp
  std::string zp_p;
  auto* zp_cmd = app.add_subcommand("zp", "order of appearance z(p) and exponent e_p");
  zp_cmd->add_option("--p", zp_p, "a prime");
  add_common(zp_cmd, cfg, true, true);
  on(zp_cmd, [&] {
    auto spec = pair_of(cfg);
    if (!zp_p.empty()) return Output{order_of_appearance(spec.pair, parse_int(zp_p)).to_json()};
    if (cfg.limit.empty()) throw InvalidArgument("zp needs --p or --limit");
    nlohmann::json rows = nlohmann::json::array();
    for (auto p : primes_in_range(2, static_cast<std::uint64_t>(limit_of(cfg, 0)))) {
      Int pp = from_u64(p);
      if (spec.pair.s() % static_cast<long>(p) == 0) continue;
      rows.push_back(order_of_appearance(spec.pair, pp).to_json());
    }
    return Output{rows};
  });

  // census
  std::uint64_t census_primes = 10000;
  std::string predicate = "z_odd", prefixes;
  auto* census_cmd = app.add_subcommand("census", "primes of the first N whose z(p) has a parity property");
  census_cmd->add_option("--primes", census_primes, "number of primes");
  census_cmd->add_option("--predicate", predicate, "z_odd or z_not_div_4");
  census_cmd->add_option("--prefixes", prefixes, "comma separated prefix lengths for running products");
  add_common(census_cmd, cfg, true, false);
  on(census_cmd, [&] {
    auto spec = pair_of(cfg);
    return Output{appearance_census(spec.pair, census_primes, parse_census_predicate(predicate), parse_list(prefixes),
                                    cfg.jobs)
                      .to_json()};
  });

  // audit
  auto* audit_cmd = app.add_subcommand("audit", "primitive divisors of the first terms");
  add_common(audit_cmd, cfg, true, true);
  on(audit_cmd, [&] {
    auto spec = pair_of(cfg);
    Effort e;
    e.rho_iterations = cfg.effort;
    auto report = primitive_divisor_audit(spec.pair, spec.side, limit_of(cfg, 100), e, cfg.jobs);
    return Output{report.to_json()};
  });

  // matveev
  unsigned mt_t = 0, mt_D = 1;
  std::string mt_B = "3", mt_A, reference;
  auto* matveev_cmd = app.add_subcommand("matveev", "Matveev constants (the built-in chain unless --t is given)");
  matveev_cmd->add_option("--t", mt_t, "number of logarithms");
  matveev_cmd->add_option("--D", mt_D, "degree of the number field");
  matveev_cmd->add_option("--B", mt_B, "bound on the exponents");
  matveev_cmd->add_option("--A", mt_A, "comma separated expressions A_1,...,A_t");
  matveev_cmd->add_option("--reference", reference, "reference value to compare against");
  add_common(matveev_cmd, cfg, false, false);
  on(matveev_cmd, [&] {
    if (mt_t == 0) {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& g : golden_constants()) {
        if (g.name.find("bound") != std::string::npos) continue;
        auto j = g.to_json();
        j["C"] = j["computed"];
        j.erase("computed");
        rows.push_back(j);
      }
      return Output{rows};
    }
    MatveevInstance inst;
    inst.t = mt_t;
    inst.D = mt_D;
    inst.B = parse_integer_expr(mt_B);
    std::stringstream ss(mt_A);
    std::string item;
    while (std::getline(ss, item, ',')) inst.A.push_back(parse_real(item)(cfg.precision));
    auto C = matveev_coefficient(inst, cfg.precision);
    nlohmann::json j{{"C", C.to_sci(6)}, {"precision_bits", std::to_string(cfg.precision)}};
    if (!reference.empty()) {
      auto ref = Interval::from_decimal(reference, cfg.precision);
      j["reference"] = reference;
      j["within"] = !ref.certainly_less(C);
    }
    return Output{j};
  });

  // bound-chain
  std::string bc_c1 = "1", bc_c2 = "0", bc_C;
  unsigned bc_k = 1;
  auto* chain_cmd = app.add_subcommand("bound-chain", "least x failing x c1 - c2 < C (1 + ln x)^k");
  chain_cmd->add_option("--c1", bc_c1, "expression");
  chain_cmd->add_option("--c2", bc_c2, "expression");
  chain_cmd->add_option("--C", bc_C, "expression (omit for the built-in chain)");
  chain_cmd->add_option("--k", bc_k, "power of the logarithm");
  chain_cmd->add_option("--reference", reference, "reference value to compare against");
  add_common(chain_cmd, cfg, false, false);
  on(chain_cmd, [&] {
    if (bc_C.empty()) {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& g : golden_constants()) {
        if (g.name.find("bound") == std::string::npos) continue;
        auto j = g.to_json();
        j["C"] = j["computed"];
        j.erase("computed");
        rows.push_back(j);
      }
      return Output{rows};
    }
    auto p = static_cast<mpfr_prec_t>(cfg.precision);
    auto res = bound_chain_solve({parse_real(bc_c1)(p), parse_real(bc_c2)(p), parse_real(bc_C)(p), bc_k});
    nlohmann::json j{{"C", to_dec(res.x0)}, {"holds_below", res.holds_below}};
    if (!reference.empty()) {
      auto ref = Interval::from_decimal(reference, p);
      j["reference"] = reference;
      j["within"] = !ref.certainly_less(Interval::from_int(res.x0, p));
    }
    return Output{j};
  });

  // reduce
  std::string rd_input, rd_gamma, rd_mu, rd_A, rd_B, rd_M;
  auto* reduce_cmd = app.add_subcommand("reduce", "Baker-Davenport reduction");
  reduce_cmd->add_option("--input", rd_input, "JSON object {gamma, mu, A, B, M}, or @file");
  reduce_cmd->add_option("--gamma", rd_gamma, "expression");
  reduce_cmd->add_option("--mu", rd_mu, "expression");
  reduce_cmd->add_option("--A", rd_A, "expression");
  reduce_cmd->add_option("--B", rd_B, "expression");
  reduce_cmd->add_option("--M", rd_M, "integer, e.g. 10^45");
  add_common(reduce_cmd, cfg, false, false);
  on(reduce_cmd, [&] {
    if (!rd_input.empty()) {
      std::string text = rd_input;
      if (text[0] == '@') {
        std::ifstream in(text.substr(1));
        if (!in) throw InvalidArgument("cannot read " + text.substr(1));
        text.assign(std::istreambuf_iterator<char>(in), {});
      }
      auto j = nlohmann::json::parse(text);
      auto get = [&](const char* k, std::string& dst) {
        if (j.contains(k)) dst = j[k].is_string() ? j[k].get<std::string>() : j[k].dump();
      };
      get("gamma", rd_gamma);
      get("mu", rd_mu);
      get("A", rd_A);
      get("B", rd_B);
      get("M", rd_M);
    }
    if (rd_gamma.empty() || rd_mu.empty() || rd_A.empty() || rd_B.empty() || rd_M.empty())
      throw InvalidArgument("reduce needs gamma, mu, A, B and M");
    ReductionInstance inst{parse_real(rd_gamma), parse_real(rd_mu), parse_real(rd_A), parse_real(rd_B),
                           parse_integer_expr(rd_M)};
    ReductionOptions opts;
    opts.start_precision = cfg.precision;
    return Output{baker_davenport_reduce(inst, opts).to_json()};
  });

  // scan
  auto* scan = app.add_subcommand("scan", "certified searches");
  scan->require_subcommand(1);

  auto* s_fixed = scan->add_subcommand("phi-fixed-point", "phi(u_n) = u_m");
  add_common(s_fixed, cfg, true, true);
  on(s_fixed, [&] { return certificate(phi_fixed_point_scan(pair_of(cfg).pair, limit_of(cfg, 100), scan_options(cfg))); });

  unsigned rep_base = 10;
  auto* s_rep = scan->add_subcommand("repdigit", "terms that are repdigits");
  s_rep->add_option("--base", rep_base, "digit base");
  add_common(s_rep, cfg, true, true);
  on(s_rep, [&] {
    auto spec = pair_of(cfg);
    return certificate(repdigit_scan(spec.pair, spec.side, limit_of(cfg, 1000), rep_base));
  });

  auto* s_phirep = scan->add_subcommand("phi-repdigit", "phi(L_n) a repdigit");
  add_common(s_phirep, cfg, false, true);
  on(s_phirep, [&] { return certificate(phi_repdigit_scan(limit_of(cfg, 1000), scan_options(cfg))); });

  long x_min = 5, x_max = 5;
  unsigned long m_limit = 40, n_limit = 1000;
  std::string form = "full";
  auto* s_power = scan->add_subcommand("phi-power", "phi(F(X, m)) = F(X, n) for F = X^k - 1 or its repunit");
  s_power->add_option("--x-min", x_min, "least X");
  s_power->add_option("--x-max", x_max, "largest X");
  s_power->add_option("--m-limit", m_limit, "largest m");
  s_power->add_option("--n-limit", n_limit, "largest n");
  s_power->add_option("--form", form, "full or repunit");
  add_common(s_power, cfg, false, false);
  on(s_power, [&] {
    return certificate(phi_power_form_scan(x_min, x_max, m_limit, n_limit, parse_power_form(form), scan_options(cfg)));
  });

  long lj_x = 50, lj_n = 10;
  auto* s_lj = scan->add_subcommand("ljunggren", "(x^n - 1)/(x - 1) a square");
  s_lj->add_option("--x-limit", lj_x, "largest x");
  s_lj->add_option("--n-limit", lj_n, "largest n");
  add_common(s_lj, cfg, false, false);
  on(s_lj, [&] { return certificate(ljunggren_check(lj_x, lj_n)); });

  long q_limit = 60;
  auto* s_q = scan->add_subcommand("q-set", "odd primes q with no prime p = 1 (mod 5) dividing 5^q - 1");
  s_q->add_option("--q-limit", q_limit, "largest q");
  add_common(s_q, cfg, false, false);
  on(s_q, [&] { return certificate(base5_q_set_scan(q_limit, scan_options(cfg))); });

  auto* s_lehmer = scan->add_subcommand("lehmer", "terms with the Lehmer property");
  add_common(s_lehmer, cfg, true, true);
  on(s_lehmer, [&] {
    auto spec = pair_of(cfg);
    return certificate(lehmer_scan(spec.pair, spec.side, limit_of(cfg, 200), scan_options(cfg)));
  });

  std::uint64_t wf_base = 10;
  unsigned wf_k = 2;
  auto* s_wf = scan->add_subcommand("wieferich", "odd primes p with p^k | b^(p-1) - 1");
  s_wf->add_option("--base", wf_base, "base b");
  s_wf->add_option("--k", wf_k, "power k");
  add_common(s_wf, cfg, false, true);
  on(s_wf, [&] {
    return certificate(wieferich_certificate(wf_base, static_cast<std::uint64_t>(limit_of(cfg, 1'000'000)), wf_k, cfg.jobs));
  });

  auto* s_exc = scan->add_subcommand("exceptions", "Pell primes r with e_r >= 2");
  add_common(s_exc, cfg, false, true);
  on(s_exc, [&] {
    return certificate(pell_exponent_exception_certificate(static_cast<std::uint64_t>(limit_of(cfg, 1'000'000)), cfg.jobs));
  });

  auto* s_sq = scan->add_subcommand("squares", "pairs of terms whose product is a square");
  add_common(s_sq, cfg, true, true);
  on(s_sq, [&] {
    auto spec = pair_of(cfg);
    return certificate(square_product_scan(spec.pair, spec.side, limit_of(cfg, 40)));
  });

  auto* s_pow = scan->add_subcommand("powers", "terms that are perfect powers");
  add_common(s_pow, cfg, true, true);
  on(s_pow, [&] {
    auto spec = pair_of(cfg);
    return certificate(perfect_power_scan(spec.pair, spec.side, limit_of(cfg, 500)));
  });

  auto* verify_cmd = app.add_subcommand("verify", "recompute golden files and compare byte for byte");
  verify_cmd->add_option("dir", verify_dir, "directory holding manifest.json")->required();

  if (args.empty()) {
    err << app.help();
    return kUsage;
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (verify_cmd->parsed()) return verify_golden(verify_dir, out, err);

  try {
    Output result = handler();
    std::string text = render(result.body, cfg.format);
    if (cfg.out.empty()) {
      out << text;
    } else {
      std::ofstream file(cfg.out, std::ios::binary);
      if (!file) {
        err << "error: cannot write " << cfg.out << "\n";
        return kUsage;
      }
      file << text;
    }
    if (result.budget_exhausted) {
      err << "warning: factoring budget exhausted; certificate is not exhaustive\n";
      return kBudget;
    }
    return kOk;
  } catch (const EffortExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const PrecisionCapReached& e) {
    err << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dispatch(args, out, err);
}

int verify_golden(const std::string& dir, std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  fs::path root(dir);
  if (!fs::is_directory(root)) {
    err << "error: not a directory: " << dir << "\n";
    return kUsage;
  }
  std::ifstream manifest_file(root / "manifest.json");
  if (!manifest_file) {
    err << "error: no manifest.json in " << dir << "\n";
    return kUsage;
  }
  nlohmann::json manifest;
  try {
    manifest = nlohmann::json::parse(manifest_file);
  } catch (const nlohmann::json::exception& e) {
    err << "error: manifest.json: " << e.what() << "\n";
    return kUsage;
  }
  nlohmann::json report = nlohmann::json::array();
  for (const auto& entry : manifest.at("entries")) {
    const auto name = entry.at("file").get<std::string>();
    std::vector<std::string> args = entry.at("args").get<std::vector<std::string>>();
    std::ifstream golden(root / name, std::ios::binary);
    if (!golden) {
      err << "error: missing golden file " << name << "\n";
      return kUsage;
    }
    std::string expected((std::istreambuf_iterator<char>(golden)), {});
    std::ostringstream actual, diag;
    int code = dispatch(args, actual, diag);
    if (code != kOk && code != kBudget) {
      err << "error: " << name << ": command failed\n" << diag.str();
      return kUsage;
    }
    if (actual.str() != expected) {
      err << "mismatch: " << name << "\n";
      try {
        auto patch = nlohmann::json::diff(nlohmann::json::parse(expected), nlohmann::json::parse(actual.str()));
        err << patch.dump(2) << "\n";
      } catch (const nlohmann::json::exception&) {
        err << "(golden file is not valid JSON)\n";
      }
      return kMismatch;
    }
    report.push_back({{"file", name}, {"status", "match"}});
  }
  out << canonical_dump({{"verified", report}});
  return kOk;
}

}  // namespace lucastk::cli
