#include "cli_app.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "padic/criterion.hpp"
#include "padic/errors.hpp"
#include "padic/identities.hpp"
#include "padic/matrix_io.hpp"
#include "padic/report.hpp"
#include "padic/suites.hpp"

namespace ultracheck {

namespace {

using namespace padic;

enum class Format { structured, tabular };

struct RunConfig {
  std::optional<std::int64_t> prime;
  std::optional<int> precision;
  std::optional<std::size_t> dim;
  std::optional<std::uint64_t> max_k;
  std::optional<std::uint64_t> max_m;
  std::optional<std::string> mu_valuations;
  std::optional<std::int64_t> target;
  std::uint64_t seed = 1;
  std::optional<std::string> format;
  std::optional<std::string> out_path;
  std::string matrix_path;
  unsigned threads = 1;
  bool inject_fault = false;
};

// Everything derived from the matrix file before any series is evaluated.
struct Workload {
  MatrixFile file;
  NormExponent norm_exponent;
  MuRange range;
  std::int64_t target = 0;
  ContextPtr ctx;
  PadicMatrix matrix;
};

MuRange parse_mu_range(const std::string& text) {
  static const std::regex pattern(R"(^(-?\d+)(?:\.\.(-?\d+))?$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) {
    throw InvalidInput("--mu-valuations expects lo..hi, got '" + text + "'");
  }
  MuRange range;
  range.lo = std::stoll(m[1].str());
  range.hi = m[2].matched ? std::stoll(m[2].str()) : range.lo;
  if (range.lo > range.hi) {
    throw InvalidInput("--mu-valuations range " + text + " is empty");
  }
  return range;
}

Format resolve_format(const RunConfig& config, Format fallback) {
  if (!config.format) {
    return fallback;
  }
  return *config.format == "tabular" ? Format::tabular : Format::structured;
}

std::int64_t radius_for(const NormExponent& s) {
  return s.is_finite() && s.value() >= 0 ? s.value() + 1 : 1;
}

// `depth` is the deepest series index the command evaluates; `extra_target`
// is the slack a command adds on top of the requested target internally.
Workload load_workload(const RunConfig& config, std::uint64_t depth, std::int64_t extra_target) {
  if (config.matrix_path.empty()) {
    throw InvalidInput("--matrix is required");
  }
  Workload w{read_matrix_file(config.matrix_path), 0, {}, 0, nullptr,
             PadicMatrix(make_context(2, 1), 1)};
  if (config.prime && *config.prime != w.file.prime) {
    throw InvalidInput("--prime " + std::to_string(*config.prime) + " does not match the file's prime " +
                       std::to_string(w.file.prime));
  }
  if (config.dim && *config.dim != w.file.dim) {
    throw InvalidInput("--dim " + std::to_string(*config.dim) + " does not match the file's dim " +
                       std::to_string(w.file.dim));
  }
  w.norm_exponent = rational_norm_exponent(w.file);
  if (config.mu_valuations) {
    w.range = parse_mu_range(*config.mu_valuations);
  } else {
    const std::int64_t lo = radius_for(w.norm_exponent);
    w.range = MuRange{lo, lo + 5};
  }
  w.target = config.target ? *config.target : default_target(depth, w.range);
  if (w.target < 1) {
    throw InvalidInput("--target must be positive");
  }
  const int precision = config.precision
                            ? *config.precision
                            : plan_precision(w.norm_exponent, depth, w.target + extra_target);
  if (precision < 1) {
    throw InvalidInput("--precision must be positive");
  }
  w.ctx = make_context(w.file.prime, precision);
  w.matrix = to_padic(w.file, w.ctx);
  return w;
}

std::string matrix_id(const RunConfig& config) {
  return std::filesystem::path(config.matrix_path).stem().string();
}

// Writes a finished report to --out or the given stream.
void emit(const RunConfig& config, std::ostream& out, const std::string& text) {
  if (config.out_path) {
    std::ofstream file(*config.out_path, std::ios::binary);
    if (!file) {
      throw InvalidInput("cannot write " + *config.out_path);
    }
    file << text;
    return;
  }
  out << text;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

CriterionOptions criterion_options(const RunConfig& config) {
  CriterionOptions opts;
  opts.matrix_id = matrix_id(config);
  opts.threads = std::max(1U, config.threads);
  opts.series.inject_truncation_fault = config.inject_fault;
  return opts;
}

ExtInt weakest_certificate(const CriterionReport& report) {
  ExtInt weakest = ExtInt::pos_inf();
  for (const auto& r : report.records) {
    weakest = min(weakest, r.certified_exponent);
  }
  return weakest;
}

// A report whose weakest certificate misses the target, or that has records
// it could not decide, is a precision failure even though it was emitted.
std::optional<int> precision_shortfall(const CriterionReport& report, const Workload& w, std::ostream& err) {
  const ExtInt weakest = weakest_certificate(report);
  if (report.undecided == 0 && weakest >= w.target) {
    return std::nullopt;
  }
  err << "precision error: ";
  if (report.undecided > 0) {
    err << report.undecided << " record(s) undecided, ";
  }
  err << "certified exponent " << exponent_text(weakest) << " at working precision " << w.ctx->precision()
      << " (target " << w.target << ", achievable exponent " << exponent_text(weakest)
      << "); raise --precision\n";
  return kExitPrecision;
}

int cmd_check(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const std::uint64_t k = config.max_k.value_or(12);
  const std::uint64_t m = config.max_m.value_or(24);
  if (k == 0 || m == 0) {
    throw InvalidInput("--kmax and --mmax must be positive");
  }
  const Workload w = load_workload(config, k, 0);
  const PowerContractionReport powers = power_contraction_check(w.matrix, m);
  const CriterionReport criterion =
      resolvent_contraction_check(w.matrix, w.range, k, w.target, criterion_options(config));

  const bool agree = powers.verdict == criterion.verdict;
  std::string summary;
  if (criterion.undecided > 0) {
    summary = "undecided, insufficient precision";
  } else if (!agree) {
    summary = std::string("engine fault, power check ") + (powers.verdict ? "holds" : "fails") +
              " but criterion " + (criterion.verdict ? "holds" : "fails");
  } else if (powers.verdict) {
    summary = "contraction, criterion holds";
  } else {
    const Witness& first = criterion.witnesses.front();
    summary = "non-contraction, witness (k=" + std::to_string(first.k) +
              ", v=" + std::to_string(first.mu_valuation) + ")";
  }

  if (resolve_format(config, Format::structured) == Format::tabular) {
    emit(config, out, criterion_csv(criterion));
  } else {
    Json doc = criterion_json(criterion);
    doc["engine_metadata"]["target"] = w.target;
    doc["engine_metadata"]["precision"] = w.ctx->precision();
    Json exponents = Json::array();
    for (const auto& e : powers.exponents) {
      exponents.push_back(exponent_json(e));
    }
    doc["power_check"] = {{"max_power", m}, {"norm_exponents", std::move(exponents)},
                          {"verdict", powers.verdict}};
    doc["agreement"] = agree && criterion.undecided == 0;
    doc["summary"] = summary;
    emit(config, out, dump(doc));
  }
  err << "verdict: " << summary << "\n";
  if (const auto code = precision_shortfall(criterion, w, err)) {
    return *code;
  }
  return agree ? kExitOk : kExitEngineFault;
}

int cmd_verify_identities(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const std::uint64_t m_max = config.max_m.value_or(4);
  const std::uint64_t k_max = config.max_k.value_or(4);
  const std::uint64_t depth = std::max(m_max, k_max) + 2;
  // Probe the range first so the precision plan can include the slack the
  // identity checker adds for the largest v(mu).
  const MatrixFile file = read_matrix_file(config.matrix_path);
  const NormExponent s = rational_norm_exponent(file);
  const MuRange range = config.mu_valuations ? parse_mu_range(*config.mu_valuations)
                                             : MuRange{radius_for(s), radius_for(s) + 5};
  const std::int64_t s_plus = s.is_finite() ? std::max<std::int64_t>(s.value(), 0) : 0;
  const std::int64_t slack = static_cast<std::int64_t>(depth) * (s_plus + std::max<std::int64_t>(range.hi, 0));
  const Workload w = load_workload(config, depth, slack);

  SeriesOptions series;
  series.inject_truncation_fault = config.inject_fault;
  std::vector<IdentityCheck> checks;
  for (std::int64_t v = w.range.lo; v <= w.range.hi; ++v) {
    const PadicScalar mu = PadicScalar::prime_power(v, w.ctx);
    require_admissible(w.matrix, mu);
    const IdentitySuite suite = verify_identities(w.matrix, mu, m_max, k_max, w.target, series);
    checks.insert(checks.end(), suite.checks.begin(), suite.checks.end());
  }

  if (resolve_format(config, Format::tabular) == Format::tabular) {
    emit(config, out, identities_csv(checks));
  } else {
    Json doc = identities_json(checks);
    doc["matrix_id"] = matrix_id(config);
    doc["prime"] = w.file.prime;
    doc["dim"] = w.file.dim;
    doc["target"] = w.target;
    doc["precision"] = w.ctx->precision();
    emit(config, out, dump(doc));
  }
  const bool all_hold = std::all_of(checks.begin(), checks.end(),
                                    [](const IdentityCheck& c) { return c.residual.holds; });
  err << "identities: " << (all_hold ? "all residuals within certificates" : "residual exceeds certificate")
      << " (" << checks.size() << " checks)\n";
  if (!all_hold) {
    return kExitEngineFault;
  }
  ExtInt weakest = ExtInt::pos_inf();
  for (const auto& c : checks) {
    weakest = min(weakest, c.residual.certificate);
  }
  if (weakest < w.target) {
    err << "precision error: certificate " << exponent_text(weakest) << " below target " << w.target
        << " at working precision " << w.ctx->precision() << " (achievable exponent " << exponent_text(weakest)
        << "); raise --precision\n";
    return kExitPrecision;
  }
  return kExitOk;
}

int cmd_scan(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const std::uint64_t k = config.max_k.value_or(12);
  if (k == 0) {
    throw InvalidInput("--kmax must be positive");
  }
  const Workload w = load_workload(config, k, 0);
  const CriterionReport report =
      resolvent_contraction_check(w.matrix, w.range, k, w.target, criterion_options(config));
  if (resolve_format(config, Format::tabular) == Format::tabular) {
    emit(config, out, criterion_csv(report));
  } else {
    Json doc = criterion_json(report);
    doc["engine_metadata"]["target"] = w.target;
    doc["engine_metadata"]["precision"] = w.ctx->precision();
    emit(config, out, dump(doc));
  }
  return precision_shortfall(report, w, err).value_or(kExitOk);
}

int cmd_selftest(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const std::vector<std::int64_t> primes =
      config.prime ? std::vector<std::int64_t>{*config.prime} : std::vector<std::int64_t>{2, 3, 5, 7};
  for (const auto p : primes) {
    if (!is_prime(p)) {
      throw InvalidInput("--prime " + std::to_string(p) + " is not prime");
    }
  }
  const std::size_t max_dim = config.dim.value_or(3);
  if (max_dim == 0) {
    throw InvalidInput("--dim must be positive");
  }
  std::vector<SuiteResult> results;
  for (const auto p : primes) {
    results.push_back(scalar_axiom_suite(p, 1000, config.seed));
  }
  for (const auto p : primes) {
    results.push_back(combinatorics_suite(p, 60));
  }

  OracleSuiteConfig oracle_config;
  oracle_config.primes = primes;
  oracle_config.instances = 24;
  oracle_config.max_dim = max_dim;
  oracle_config.target = config.target.value_or(30);
  oracle_config.seed = config.seed;
  oracle_config.precision = config.precision.value_or(0);
  oracle_config.series.inject_truncation_fault = config.inject_fault;
  results.push_back(engine_oracle_suite(oracle_config));

  CorpusConfig corpus;
  corpus.primes = primes;
  corpus.contractive = 12;
  corpus.non_contractive = 12;
  corpus.max_dim = max_dim;
  corpus.max_k = config.max_k.value_or(6);
  corpus.max_power = config.max_m.value_or(24);
  corpus.seed = config.seed;
  corpus.threads = std::max(1U, config.threads);
  results.push_back(biconditional_suite(corpus));

  std::ostringstream text;
  bool failed = false;
  bool precision = false;
  for (const auto& r : results) {
    text << r.name << ": " << r.passed << "/" << r.total << " passed";
    if (r.precision_errors > 0) {
      text << ", " << r.precision_errors << " precision error(s)";
    }
    text << "\n";
    for (const auto& f : r.failures) {
      text << "  " << f << "\n";
    }
    failed = failed || r.passed != r.total;
    precision = precision || r.precision_errors > 0;
  }
  text << "selftest: " << (failed ? "FAILED" : precision ? "PRECISION ERRORS" : "all suites passed") << "\n";
  emit(config, out, text.str());
  if (failed) {
    return kExitEngineFault;
  }
  if (precision) {
    err << "precision error: raise --precision or lower --target\n";
    return kExitPrecision;
  }
  return kExitOk;
}

void add_common_options(CLI::App& cmd, RunConfig& config, bool needs_matrix) {
  cmd.add_option("--prime", config.prime, "Prime p; must match the matrix file");
  cmd.add_option("--precision", config.precision, "Working precision in p-adic digits (default: planned)");
  cmd.add_option("--dim", config.dim, "Matrix dimension; must match the matrix file");
  cmd.add_option("--kmax", config.max_k, "Largest k");
  cmd.add_option("--mmax", config.max_m, "Largest power m (identity index for verify-identities)");
  cmd.add_option("--mu-valuations", config.mu_valuations, "Sampled v(mu) range lo..hi");
  cmd.add_option("--target", config.target, "Target tail exponent");
  cmd.add_option("--seed", config.seed, "Seed for random instances");
  cmd.add_option("--format", config.format, "Output format")->check(CLI::IsMember({"structured", "tabular"}));
  cmd.add_option("--out", config.out_path, "Write the report to this path");
  auto* matrix = cmd.add_option("--matrix", config.matrix_path, "Matrix file");
  if (needs_matrix) {
    matrix->required();
  }
  // Test hooks, not shown in --help.
  cmd.add_option("--threads", config.threads)->group("");
  cmd.add_flag("--inject-fault", config.inject_fault)->group("");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified p-adic resolvent contraction checks"};
  app.name("ultracheck");
  app.require_subcommand(1);
  RunConfig config;
  auto* check = app.add_subcommand("check", "Compare the power check with the resolvent criterion");
  auto* identities = app.add_subcommand("verify-identities", "Verify the resolvent identities");
  auto* scan = app.add_subcommand("scan", "Emit the criterion grid");
  auto* selftest = app.add_subcommand("selftest", "Run the built-in property suites");
  add_common_options(*check, config, true);
  add_common_options(*identities, config, true);
  add_common_options(*scan, config, true);
  add_common_options(*selftest, config, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (check->parsed()) {
      return cmd_check(config, out, err);
    }
    if (identities->parsed()) {
      return cmd_verify_identities(config, out, err);
    }
    if (scan->parsed()) {
      return cmd_scan(config, out, err);
    }
    return cmd_selftest(config, out, err);
  } catch (const PrecisionError& e) {
    err << "precision error: " << e.what() << " (achievable exponent " << exponent_text(e.achievable())
        << ")\n";
    return kExitPrecision;
  } catch (const EngineFault& e) {
    err << "engine fault: " << e.what() << "\n";
    return kExitEngineFault;
  } catch (const Error& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::out_of_range& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  }
}

} // namespace ultracheck
