#include "padic/suites.hpp"

#include <sstream>

#include "padic/combinatorics.hpp"
#include "padic/crosscheck.hpp"
#include "padic/errors.hpp"
#include "padic/random.hpp"

namespace padic {

namespace {

constexpr std::size_t kMaxFailureNotes = 8;

std::int64_t radius_for(const NormExponent& s) {
  return s.is_finite() && s.value() >= 0 ? s.value() + 1 : 1;
}

std::string describe(const MatrixFile& file) {
  std::ostringstream out;
  out << "p=" << file.prime << " [";
  for (std::size_t i = 0; i < file.dim; ++i) {
    out << (i ? "; " : "");
    for (std::size_t j = 0; j < file.dim; ++j) {
      out << (j ? " " : "") << format_rational(file.entries[i][j]);
    }
  }
  out << "]";
  return out.str();
}

std::vector<MatrixFile> make_corpus(const CorpusConfig& config, std::size_t count, bool contractive) {
  // Separate streams so the two corpora do not share entries.
  MatrixSampler sampler(contractive ? config.seed : config.seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<MatrixFile> corpus;
  corpus.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::int64_t p = config.primes[i % config.primes.size()];
    const std::size_t dim = 1 + (i / config.primes.size()) % config.max_dim;
    corpus.push_back(contractive ? sampler.contractive(p, dim) : sampler.non_contractive(p, dim));
  }
  return corpus;
}

} // namespace

int plan_precision(NormExponent norm_exponent, std::uint64_t depth, std::int64_t target) {
  const std::int64_t s = norm_exponent.is_finite() ? std::max<std::int64_t>(norm_exponent.value(), 0) : 0;
  const std::int64_t n = std::max<std::int64_t>(target, 1) + 16 + 2 * static_cast<std::int64_t>(depth + 1) * s;
  return static_cast<int>(n);
}

PadicMatrix to_padic(const MatrixFile& file, const ContextPtr& ctx) {
  if (file.prime != ctx->prime()) {
    throw InvalidInput("matrix prime " + std::to_string(file.prime) + " differs from context prime " +
                       std::to_string(ctx->prime()));
  }
  return PadicMatrix::from_rationals(ctx, file.entries);
}

oracle::RationalMatrix to_oracle(const MatrixFile& file) {
  return oracle::RationalMatrix(file.entries);
}

void SuiteResult::record(bool passed_check, const std::string& what) {
  ++total;
  if (passed_check) {
    ++passed;
  } else if (failures.size() < kMaxFailureNotes) {
    failures.push_back(what);
  }
}

SuiteResult scalar_axiom_suite(std::int64_t p, std::size_t pairs, std::uint64_t seed) {
  SuiteResult result;
  result.name = "scalar_axioms p=" + std::to_string(p);
  const auto ctx = make_context(p, 40);
  MatrixSampler sampler(seed ^ static_cast<std::uint64_t>(p));
  for (std::size_t i = 0; i < pairs; ++i) {
    const mpq_class x = sampler.scalar(p, -5, 5);
    // Every fourth pair shares a valuation to exercise cancellation.
    const mpq_class y = i % 4 == 0 ? mpq_class(x * sampler.unit(p)) : sampler.scalar(p, -5, 5);
    const PadicScalar px = PadicScalar::from_rational(x, ctx);
    const PadicScalar py = PadicScalar::from_rational(y, ctx);
    const Valuation vx = oracle::rational_valuation(x, p);
    const Valuation vy = oracle::rational_valuation(y, p);
    const PadicScalar sum = px + py;
    const PadicScalar product = px * py;
    const mpq_class exact_sum = x + y;
    const mpq_class exact_product = x * y;

    bool ok = sum.valuation() == oracle::rational_valuation(exact_sum, p);
    ok = ok && sum.valuation() >= min(vx, vy);
    if (vx != vy) {
      ok = ok && sum.valuation() == min(vx, vy);
    }
    ok = ok && sum.is_exact() && sum.representative() == exact_sum;
    ok = ok && product.valuation() == vx + vy;
    ok = ok && product.is_exact() && product.representative() == exact_product;
    result.record(ok, "pair " + x.get_str() + ", " + y.get_str());
  }
  return result;
}

SuiteResult combinatorics_suite(std::int64_t p, std::uint64_t j_max) {
  SuiteResult result;
  result.name = "legendre_kummer p=" + std::to_string(p);
  const auto up = static_cast<std::uint64_t>(p);
  const mpz_class pz = static_cast<long>(p);
  for (std::uint64_t j = 0; j <= j_max; ++j) {
    std::uint64_t floor_sum = 0;
    for (std::uint64_t q = up; q <= j; q *= up) {
      floor_sum += j / q;
    }
    const std::uint64_t digit_formula = (j - digit_sum(j, up)) / (up - 1);
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), j);
    const auto factored = mpz_remove(fact.get_mpz_t(), fact.get_mpz_t(), pz.get_mpz_t());
    const std::uint64_t legendre = legendre_factorial_valuation(j, up);
    result.record(legendre == floor_sum && legendre == digit_formula && legendre == factored,
                  "legendre j=" + std::to_string(j));
    for (std::uint64_t m = 0; m <= j; ++m) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), j, m);
      const auto binom_val = mpz_remove(binom.get_mpz_t(), binom.get_mpz_t(), pz.get_mpz_t());
      result.record(kummer_binomial_valuation(j, m, up) == binom_val,
                    "kummer j=" + std::to_string(j) + " m=" + std::to_string(m));
    }
  }
  return result;
}

SuiteResult engine_oracle_suite(const OracleSuiteConfig& config) {
  SuiteResult result;
  result.name = "engine_oracle";
  MatrixSampler sampler(config.seed);
  for (std::size_t i = 0; i < config.instances; ++i) {
    const std::int64_t p = config.primes[i % config.primes.size()];
    const std::size_t dim = 1 + (i / config.primes.size()) % config.max_dim;
    const MatrixFile file = i % 2 == 0 ? sampler.contractive(p, dim) : sampler.non_contractive(p, dim);
    const NormExponent s = rational_norm_exponent(file);
    const std::int64_t v = radius_for(s) + static_cast<std::int64_t>((i / 2) % 3);
    const int precision = config.precision > 0
                              ? config.precision
                              : plan_precision(s, config.max_derivative + 2,
                                               config.target + static_cast<std::int64_t>(config.max_derivative) * v);
    const auto ctx = make_context(p, precision);
    const PadicMatrix a = to_padic(file, ctx);
    const oracle::RationalMatrix exact_a = to_oracle(file);
    const PadicScalar mu = PadicScalar::prime_power(v, ctx);
    mpq_class exact_mu = 1;
    for (std::int64_t e = 0; e < v; ++e) {
      exact_mu *= static_cast<long>(p);
    }
    const std::string where = describe(file) + " v=" + std::to_string(v);
    try {
      const auto engine = neumann_resolvent(a, mu, config.target, config.series);
      const auto check = crosscheck(engine, oracle::exact_resolvent(exact_a, exact_mu, p), p);
      result.record(check.passes, "resolvent " + where);
      for (std::uint64_t m = 1; m <= config.max_derivative; ++m) {
        const auto derivative = resolvent_derivative(a, mu, m, config.target, config.series);
        const auto exact = oracle::exact_resolvent_derivative(exact_a, exact_mu, m, p);
        result.record(crosscheck(derivative, exact, p).passes,
                      "derivative m=" + std::to_string(m) + " " + where);
      }
    } catch (const PrecisionError& e) {
      ++result.precision_errors;
      if (result.failures.size() < kMaxFailureNotes) {
        result.failures.push_back(std::string("precision: ") + e.what());
      }
    }
  }
  return result;
}

std::vector<MatrixFile> contractive_corpus(const CorpusConfig& config) {
  return make_corpus(config, config.contractive, true);
}

std::vector<MatrixFile> non_contractive_corpus(const CorpusConfig& config) {
  return make_corpus(config, config.non_contractive, false);
}

CorpusEntry evaluate_corpus_entry(const MatrixFile& file, bool contractive, const CorpusConfig& config) {
  CorpusEntry entry;
  entry.matrix = file;
  entry.contractive_by_construction = contractive;
  entry.norm_exponent = rational_norm_exponent(file);
  const std::int64_t lo = radius_for(entry.norm_exponent);
  entry.range = MuRange{lo, lo + 5};
  const std::int64_t target = default_target(config.max_k, entry.range);
  const auto ctx = make_context(file.prime, plan_precision(entry.norm_exponent, config.max_k, target));
  const PadicMatrix a = to_padic(file, ctx);
  entry.powers = power_contraction_check(a, config.max_power);
  CriterionOptions opts;
  opts.threads = config.threads;
  entry.criterion = resolvent_contraction_check(a, entry.range, config.max_k, target, opts);
  if (!entry.powers.verdict) {
    WitnessSearch search;
    search.range = entry.range;
    search.max_k = config.max_k;
    search.target = target;
    search.criterion = opts;
    entry.witness = violation_witness(a, search);
  }
  return entry;
}

SuiteResult biconditional_suite(const CorpusConfig& config) {
  SuiteResult result;
  result.name = "biconditional";
  for (int pass = 0; pass < 2; ++pass) {
    const bool contractive = pass == 0;
    const auto corpus = contractive ? contractive_corpus(config) : non_contractive_corpus(config);
    for (const auto& file : corpus) {
      try {
        const CorpusEntry e = evaluate_corpus_entry(file, contractive, config);
        bool ok = e.criterion.undecided == 0 && e.powers.verdict == e.criterion.verdict &&
                  e.powers.verdict == contractive;
        if (!contractive) {
          ok = ok && e.witness && e.witness->k == 1 &&
               e.witness->lhs_exponent == e.norm_exponent - e.witness->mu_valuation;
        }
        result.record(ok, describe(file));
      } catch (const PrecisionError& err) {
        ++result.precision_errors;
        if (result.failures.size() < kMaxFailureNotes) {
          result.failures.push_back(std::string("precision: ") + err.what());
        }
      }
    }
  }
  return result;
}

} // namespace padic
