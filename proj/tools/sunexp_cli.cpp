// Command-line front end: compute ν(T_j(k)), β, ē, s and x_{i,n}; reproduce
// the published tables; run the verification suites.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error,
// 3 precision/certification failure, 4 digit ambiguity in x_{i,n}.

#include "sunexp/sunexp.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <regex>
#include <string>
#include <vector>

namespace {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kUsage = 2,
  kPrecision = 3,
  kContradiction = 4,
};

sunexp::Int parse_int(const std::string& text) {
  static const std::regex pattern("[-+]?[0-9]+");
  if (!std::regex_match(text, pattern)) throw std::invalid_argument("not an integer: '" + text + "'");
  return sunexp::Int(text.front() == '+' ? text.substr(1) : text);
}

std::uint64_t parse_count(const std::string& text, const char* what) {
  const sunexp::Int v = parse_int(text);
  if (v < 0 || v > std::numeric_limits<std::uint32_t>::max()) {
    throw std::invalid_argument(std::string(what) + " must be a nonnegative integer below 2^32");
  }
  return static_cast<std::uint64_t>(v);
}

unsigned default_precision_cap() {
  if (const char* env = std::getenv("SUNEXP_PRECISION_CAP")) {
    try {
      return static_cast<unsigned>(parse_count(env, "SUNEXP_PRECISION_CAP"));
    } catch (const std::invalid_argument&) {
      std::cerr << "warning: ignoring malformed SUNEXP_PRECISION_CAP\n";
    }
  }
  return sunexp::PrecisionPolicy{}.cap;
}

struct Common {
  unsigned precision_cap = default_precision_cap();
  unsigned jobs = 1;
  bool include_e4 = false;
  std::string format;

  sunexp::PrecisionPolicy policy() const {
    sunexp::PrecisionPolicy p;
    p.cap = precision_cap;
    p.initial = std::min(p.initial, precision_cap);
    return p;
  }
  sunexp::VerifyOptions verify_options() const {
    return {.include_e4 = include_e4, .jobs = jobs, .policy = policy()};
  }
};

int cmd_nu_t(const std::string& j, const std::string& k, const Common& common) {
  const sunexp::Val2 v = sunexp::nu_t(parse_count(j, "j"), parse_int(k), common.policy());
  std::cout << sunexp::to_string(v) << '\n';
  return kOk;
}

int cmd_beta(const std::string& k, const std::string& n, const Common& common) {
  const std::uint64_t size = parse_count(n, "n");
  if (size == 0) throw std::invalid_argument("n must be >= 1");
  const sunexp::BetaResult b = sunexp::beta(parse_int(k), size, common.policy());
  std::cout << sunexp::to_string(b.value);
  if (b.witness_j) std::cout << " (witness j=" << *b.witness_j << ", scanned j=" << size << ".." << b.cutoff_j << ")";
  if (!b.certified) {
    std::cout << " uncertified\n";
    return kPrecision;
  }
  std::cout << '\n';
  return kOk;
}

int cmd_ebar(const std::string& n, std::optional<unsigned> modulus_exp, const Common& common) {
  const std::uint64_t size = parse_count(n, "n");
  if (size == 0) throw std::invalid_argument("n must be >= 1");
  const sunexp::ExponentReport r = sunexp::ebar(size, modulus_exp, common.policy(), common.jobs);
  const std::uint64_t modulus = std::uint64_t{1} << r.modulus_exp;
  std::cout << sunexp::to_string(r.ebar) << ", argmax k ≡ ";
  for (std::size_t i = 0; i < r.argmax.size(); ++i) std::cout << (i ? ", " : "") << r.argmax[i];
  std::cout << " mod " << modulus << '\n'
            << "s(n)=" << r.s_n << " beta(n-1,n)=" << sunexp::to_string(r.beta_at_n_minus_1.value)
            << " (searched k mod 2^" << r.modulus_exp << ", stable at 2^" << r.modulus_exp + 1
            << ")\n";
  return kOk;
}

int cmd_s(const std::string& n) {
  const std::uint64_t size = parse_count(n, "n");
  if (size == 0) throw std::invalid_argument("n must be >= 1");
  std::cout << sunexp::s_lower(size) << '\n';
  return kOk;
}

int cmd_table(const std::string& id, const Common& common) {
  const sunexp::TableReport t = sunexp::reproduce_table(id, common.verify_options());
  if (common.format == "csv") {
    std::cout << sunexp::format::table_csv(t);
  } else if (common.format == "json") {
    std::cout << sunexp::format::table_json(t).dump() << '\n';
  } else {
    std::cout << sunexp::format::table_markdown(t);
  }
  return t.all_pass() ? kOk : kMismatch;
}

int cmd_verify(const std::vector<std::string>& suites, const Common& common) {
  const auto verdicts = sunexp::run_suites(suites, common.verify_options());
  std::size_t failed = 0;
  for (const auto& v : verdicts) {
    failed += v.pass ? 0 : 1;
    std::cout << (common.format == "json" ? sunexp::format::json_line(v)
                                          : sunexp::format::text_line(v))
              << '\n';
  }
  std::ostream& summary = common.format == "json" ? std::cerr : std::cout;
  summary << verdicts.size() << " verdicts: " << verdicts.size() - failed << " pass, " << failed
          << " fail\n";
  return failed == 0 ? kOk : kMismatch;
}

int cmd_xin(const std::string& i, const std::string& n, const std::string& t, const Common& common) {
  const unsigned digits = static_cast<unsigned>(parse_count(t, "t"));
  const sunexp::TruncatedTwoAdic x =
      sunexp::x_approx(parse_count(i, "i"), parse_count(n, "n"), digits, common.policy());
  std::string binary;
  for (unsigned bit = digits; bit-- > 0;) binary += bit_test(x.digits, bit) ? '1' : '0';
  std::cout << "x_{" << x.i << "," << x.n << "} mod 2^" << digits << " = " << binary
            << " (binary), " << x.digits << " (decimal)\n";
  const sunexp::Val2 v = x.valuation();
  std::cout << (v.is_exact() ? "nu = " : "nu >= ") << v.value() << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact 2-adic computation of partial Stirling numbers and v1-periodic exponents of SU(n)"};
  app.require_subcommand(1);
  Common common;

  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--precision-cap", common.precision_cap,
                    "Largest working precision in bits (env SUNEXP_PRECISION_CAP)")
        ->check(CLI::Range(1U, 1U << 20));
  };
  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", common.jobs, "Worker threads")->check(CLI::Range(1U, 256U));
  };

  std::string a, b, c;
  auto* nu_t = app.add_subcommand("nu-t", "Print nu(T_j(k))");
  nu_t->add_option("j", a)->required();
  nu_t->add_option("k", b)->required();
  add_cap(nu_t);

  auto* beta = app.add_subcommand("beta", "Print beta(k,n) = min_{j>=n} nu(T_j(k))");
  beta->add_option("k", a)->required();
  beta->add_option("n", b)->required();
  add_cap(beta);

  std::optional<unsigned> modulus_exp;
  auto* ebar = app.add_subcommand("ebar", "Print ebar(n) = max_k beta(k,n) and its maximizing k");
  ebar->add_option("n", a)->required();
  ebar->add_option("--modulus-exp", modulus_exp, "Search k mod 2^M")->check(CLI::Range(1U, 24U));
  add_cap(ebar);
  add_jobs(ebar);

  auto* s = app.add_subcommand("s", "Print s(n) = n - 1 + nu(floor(n/2)!)");
  s->add_option("n", a)->required();

  auto* table = app.add_subcommand("table", "Recompute a published table (1.1, 1.5, 1.6)");
  table->add_option("table_id", a)->required()->check(CLI::IsMember({"1.1", "1.5", "1.6"}));
  common.format = "markdown";
  table->add_option("--format", common.format)->check(CLI::IsMember({"markdown", "csv", "json"}));
  table->add_flag("--include-e4", common.include_e4, "Include e = 4 in table 1.1");
  add_cap(table);
  add_jobs(table);

  std::vector<std::string> suites;
  std::vector<std::string> suite_choices = sunexp::suite_names();
  suite_choices.push_back("all");
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("suites", suites)->required()->check(CLI::IsMember(suite_choices));
  std::string verify_format = "text";
  verify->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--include-e4", common.include_e4, "Include the e = 4 sweeps");
  add_cap(verify);
  add_jobs(verify);

  auto* xin = app.add_subcommand("xin", "Print the low t digits of x_{i,n}");
  xin->add_option("i", a)->required();
  xin->add_option("n", b)->required();
  xin->add_option("t", c)->required();
  add_cap(xin);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*nu_t) return cmd_nu_t(a, b, common);
    if (*beta) return cmd_beta(a, b, common);
    if (*ebar) return cmd_ebar(a, modulus_exp, common);
    if (*s) return cmd_s(a);
    if (*table) return cmd_table(a, common);
    if (*verify) {
      common.format = verify_format;
      return cmd_verify(suites, common);
    }
    if (*xin) return cmd_xin(a, b, c, common);
  } catch (const sunexp::theorem_contradiction& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kContradiction;
  } catch (const sunexp::precision_exhausted& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPrecision;
  } catch (const sunexp::unstable_modulus& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPrecision;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
