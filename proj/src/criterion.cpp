#include "padic/criterion.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <tuple>

#include "padic/combinatorics.hpp"
#include "padic/errors.hpp"

namespace padic {

namespace {

// Runs body(i) for i in [0, count) on up to `threads` workers. Results must be
// written to per-index slots so the outcome is independent of scheduling.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      body(i);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) {
            failure = std::current_exception();
          }
        }
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
}

void require_range(const MuRange& range) {
  if (range.lo > range.hi) {
    throw InvalidInput("empty mu valuation range " + std::to_string(range.lo) + ".." +
                       std::to_string(range.hi));
  }
}

std::size_t range_size(const MuRange& range) {
  return static_cast<std::size_t>(range.hi - range.lo + 1);
}

// Norm exponents of A^1 .. A^count.
std::vector<NormExponent> power_norms(const PadicMatrix& a, std::uint64_t count) {
  std::vector<NormExponent> norms;
  norms.reserve(count);
  PadicMatrix power = a;
  for (std::uint64_t j = 1; j <= count; ++j) {
    if (j > 1) {
      power = power * a;
    }
    norms.push_back(mat_norm(power));
  }
  return norms;
}

// Upper bound on the norm of the true value behind a certified matrix.
NormExponent norm_upper_bound(const CertifiedMatrix& x) {
  return max(mat_norm(x.value), -x.error_exponent);
}

} // namespace

MuRange default_mu_range(const PadicMatrix& a) {
  const std::int64_t lo = admissible_radius(a);
  return {lo, lo + 5};
}

std::int64_t default_target(std::uint64_t max_k, const MuRange& range) {
  return 2 * static_cast<std::int64_t>(max_k) * range.hi + 8;
}

CriterionRecord decide_record(std::uint64_t k, std::int64_t mu_valuation, const SeriesResult& value) {
  CriterionRecord rec;
  rec.k = k;
  rec.mu_valuation = mu_valuation;
  rec.truncation_order = value.truncation_order;
  rec.certified_exponent = value.tail_bound_exponent;
  const ExtInt threshold = static_cast<std::int64_t>(k) * mu_valuation;
  rec.rhs_exponent = -threshold;

  const ExtInt e = value.tail_bound_exponent;
  // lower bound on the true min valuation, and the smallest valuation that is
  // known exactly (certified digits, below the error scale)
  ExtInt lower = ExtInt::pos_inf();
  ExtInt certain = ExtInt::pos_inf();
  for (const auto& x : value.value.entries()) {
    lower = min(lower, min(x.valuation(), e));
    if (!x.is_zero() && x.certified_digits() >= 1 && x.valuation() < e) {
      certain = min(certain, x.valuation());
    }
  }
  rec.lhs_exponent = -lower;
  rec.lhs_is_bound = !lower.is_pos_inf() && certain != lower;
  if (certain < threshold) {
    rec.status = RecordStatus::fail;
  } else if (lower >= threshold) {
    rec.status = RecordStatus::pass;
  } else {
    rec.status = RecordStatus::undecided;
  }
  return rec;
}

CriterionReport resolvent_contraction_check(const PadicMatrix& a, const MuRange& range,
                                            std::uint64_t max_k, std::int64_t target,
                                            const CriterionOptions& opts) {
  if (max_k == 0) {
    throw InvalidInput("resolvent contraction check needs K >= 1");
  }
  require_range(range);
  const auto& ctx = a.context();
  require_admissible(a, PadicScalar::prime_power(range.lo, ctx));

  const std::size_t count = range_size(range);
  std::vector<std::vector<CriterionRecord>> per_v(count);
  parallel_for(count, opts.threads, [&](std::size_t i) {
    const std::int64_t v = range.lo + static_cast<std::int64_t>(i);
    const PadicScalar mu = PadicScalar::prime_power(v, ctx);
    SeriesOptions series = opts.series;
    series.enforce_target = false;
    const auto powers = rminusi_power_series_range(a, mu, max_k - 1, target, series);
    auto& out = per_v[i];
    for (std::uint64_t m = 0; m < max_k; ++m) {
      out.push_back(decide_record(m + 1, v, powers[m]));
    }
  });

  CriterionReport report;
  report.matrix_id = opts.matrix_id;
  report.prime = ctx->prime();
  report.dim = a.dim();
  for (std::uint64_t m = 0; m < max_k; ++m) {
    for (std::size_t i = 0; i < count; ++i) {
      const CriterionRecord& rec = per_v[i][m];
      report.records.push_back(rec);
      if (rec.status == RecordStatus::fail) {
        report.witnesses.push_back({rec.k, rec.mu_valuation});
      } else if (rec.status == RecordStatus::undecided) {
        ++report.undecided;
      }
    }
  }
  report.verdict = report.witnesses.empty() && report.undecided == 0;
  return report;
}

ForwardReport forward_direction_suite(const PadicMatrix& a, std::uint64_t max_power,
                                      std::uint64_t max_k, const MuRange& range,
                                      std::int64_t target, const CriterionOptions& opts) {
  ForwardReport report;
  report.powers = power_contraction_check(a, max_power);
  if (!report.powers.verdict) {
    throw InvalidInput("forward direction requires ||A^m|| <= 1 for m = 1..M");
  }
  report.criterion = resolvent_contraction_check(a, range, max_k, target, opts);

  const auto& ctx = a.context();
  const auto p = static_cast<std::uint64_t>(ctx->prime());
  std::uint64_t max_order = 0;
  for (const auto& rec : report.criterion.records) {
    max_order = std::max(max_order, rec.truncation_order);
  }
  // a_val[i] = min valuation of A^i, i = 1 .. max_order + 1
  std::vector<Valuation> a_val{Valuation::pos_inf()};
  for (const auto& e : power_norms(a, max_order + 1)) {
    a_val.push_back(-e);
  }

  SeriesOptions series = opts.series;
  series.enforce_target = false;
  for (std::int64_t v = range.lo; v <= range.hi; ++v) {
    const PadicScalar mu = PadicScalar::prime_power(v, ctx);
    const auto sums = rminusi_power_series_range(a, mu, max_k - 1, target, series);
    std::uint64_t order_v = 0;
    for (const auto& w : sums) {
      order_v = std::max(order_v, w.truncation_order);
    }
    // terms[j] = (mu A)^(j+1), stopping once a power vanishes.
    const PadicMatrix mu_a = mu * a;
    std::vector<PadicMatrix> terms{mu_a};
    while (terms.size() <= order_v && !terms.back().is_zero()) {
      terms.push_back(terms.back() * mu_a);
    }

    for (std::uint64_t m = 0; m < max_k; ++m) {
      const SeriesResult& sum = sums[m];
      ChainRecord chain;
      chain.k = m + 1;
      chain.mu_valuation = v;
      chain.truncation_order = sum.truncation_order;
      const ExtInt mu_part = ExtInt(static_cast<std::int64_t>(m + 1) * v);
      ExtInt min_term = ExtInt::pos_inf();
      mpz_class coeff = 1;
      for (std::uint64_t j = m; j <= sum.truncation_order && j < terms.size(); ++j) {
        if (j > m) {
          coeff = coeff * static_cast<unsigned long>(j) / static_cast<unsigned long>(j - m);
        }
        const Valuation term_val =
            (PadicScalar::from_integer(coeff, ctx) * terms[j]).min_valuation();
        min_term = min(min_term, term_val);
        const auto binom_val = static_cast<std::int64_t>(kummer_binomial_valuation(j, m, p));
        const ExtInt scaled_power = ExtInt(static_cast<std::int64_t>(j + 1) * v) + a_val[j + 1];
        chain.term_bounded_by_product =
            chain.term_bounded_by_product && term_val >= ExtInt(binom_val) + scaled_power;
        chain.binomial_unit_bound = chain.binomial_unit_bound && binom_val >= 0;
        chain.power_bound = chain.power_bound && scaled_power >= mu_part;
        ++chain.terms_checked;
      }
      chain.sum_bounded_by_sup =
          sum.value.min_valuation() >= min(min_term, sum.tail_bound_exponent);
      chain.tail_bound = sum.tail_bound_exponent >= mu_part;
      report.chain.push_back(chain);
    }
  }
  std::sort(report.chain.begin(), report.chain.end(), [](const ChainRecord& x, const ChainRecord& y) {
    return std::tie(x.k, x.mu_valuation) < std::tie(y.k, y.mu_valuation);
  });
  report.passed = report.criterion.verdict &&
                  std::all_of(report.chain.begin(), report.chain.end(),
                              [](const ChainRecord& c) { return c.holds(); });
  return report;
}

ConverseReport converse_direction_suite(const PadicMatrix& a, std::uint64_t max_k,
                                        const MuRange& range, std::int64_t target,
                                        const CriterionOptions& opts) {
  ConverseReport report;
  report.criterion = resolvent_contraction_check(a, range, max_k, target, opts);
  if (!report.criterion.verdict) {
    throw InvalidInput("converse direction requires the resolvent bound on the sampled grid");
  }
  const auto& ctx = a.context();
  const std::size_t n = a.dim();
  // norms[j] = log_p ||A^j||, j = 1..K
  std::vector<NormExponent> norms{NormExponent(0)};
  for (const auto& e : power_norms(a, max_k)) {
    norms.push_back(e);
  }
  auto max_bound_at = [&](std::uint64_t k, std::int64_t v) {
    NormExponent bound = 0;
    for (std::uint64_t j = 1; j <= k + 1; ++j) {
      bound = max(bound, norms[j] - ExtInt(static_cast<std::int64_t>(j) * v));
    }
    return bound;
  };

  SeriesOptions series = opts.series;
  series.enforce_target = false;
  const std::size_t count = range_size(range);
  std::vector<std::vector<ConverseRecord>> per_v(count);
  std::vector<char> fault(count, 0);
  parallel_for(count, opts.threads, [&](std::size_t i) {
    const std::int64_t v = range.lo + static_cast<std::int64_t>(i);
    const PadicScalar mu = PadicScalar::prime_power(v, ctx);
    const CertifiedMatrix i_minus_mu_a = certify(PadicMatrix::identity(ctx, n) - mu * a);
    CertifiedMatrix factor = i_minus_mu_a;
    for (std::uint64_t k = 0; k < max_k; ++k) {
      if (k > 0) {
        factor = factor * i_minus_mu_a;
      }
      const SOperatorForms forms = s_operator_forms(a, mu, k, target, series);
      const CertifiedMatrix s_k = forms.division_free.certified();
      ConverseRecord rec;
      rec.k = k;
      rec.mu_valuation = v;
      rec.s_norm = mat_norm(s_k.value);
      const NormExponent s_upper = norm_upper_bound(s_k);
      rec.s_bounded = s_upper <= NormExponent(0);
      rec.factorization = compare(certify(mat_pow(a, k + 1)), factor * s_k);
      if (!rec.factorization.holds || !forms.agreement.holds) {
        fault[i] = 1;
      }
      rec.power_norm = norms[k + 1];
      rec.factor_norm = mat_norm(factor.value);
      rec.max_bound = max_bound_at(k, v);
      const NormExponent factor_upper = norm_upper_bound(factor);
      rec.chain_holds = rec.power_norm <= factor_upper + s_upper &&
                        factor_upper <= rec.max_bound &&
                        (!rec.s_bounded || rec.power_norm <= rec.max_bound);
      per_v[i].push_back(rec);
    }
  });

  for (std::uint64_t k = 0; k < max_k; ++k) {
    for (std::size_t i = 0; i < count; ++i) {
      report.records.push_back(per_v[i][k]);
    }
  }
  report.engine_fault = std::any_of(fault.begin(), fault.end(), [](char f) { return f != 0; });

  for (std::uint64_t k = 0; k < max_k; ++k) {
    ConverseLimit limit;
    limit.k = k;
    limit.conclusion = norms[k + 1];
    // Past v* = max_j ceil(log_p ||A^j|| / j) every term is <= 1.
    std::int64_t v_star = range.hi;
    for (std::uint64_t j = 1; j <= k + 1; ++j) {
      if (norms[j].is_finite() && norms[j] > NormExponent(0)) {
        const auto ji = static_cast<std::int64_t>(j);
        v_star = std::max(v_star, (norms[j].value() + ji - 1) / ji);
      }
    }
    limit.monotone = true;
    for (std::int64_t v = range.lo; v <= v_star; ++v) {
      const NormExponent bound = max_bound_at(k, v);
      if (!limit.sweep.empty() && bound > limit.sweep.back().second) {
        limit.monotone = false;
      }
      limit.sweep.emplace_back(v, bound);
      if (!limit.collapse_valuation && bound == NormExponent(0)) {
        limit.collapse_valuation = v;
      }
    }
    limit.holds = limit.monotone && limit.collapse_valuation.has_value() &&
                  limit.conclusion <= NormExponent(0);
    report.limits.push_back(std::move(limit));
  }

  const bool a_ok = std::all_of(report.records.begin(), report.records.end(),
                                [](const ConverseRecord& r) { return r.s_bounded && r.chain_holds; });
  const bool d_ok = std::all_of(report.limits.begin(), report.limits.end(),
                                [](const ConverseLimit& l) { return l.holds; });
  report.inequalities_hold = a_ok && d_ok;
  report.passed = report.inequalities_hold && !report.engine_fault;
  return report;
}

std::optional<ViolationWitness> violation_witness(const PadicMatrix& a, const WitnessSearch& search) {
  if (a.is_zero()) {
    return std::nullopt;
  }
  const auto& ctx = a.context();
  const std::int64_t s = mat_norm(a).value();
  if (s >= 1) {
    const std::int64_t v = s + 1;
    const PadicScalar mu = PadicScalar::prime_power(v, ctx);
    SeriesOptions series = search.criterion.series;
    series.enforce_target = false;
    // ||R - I|| = p^(s - v) needs a certificate beyond v - s.
    const auto r_minus_i = rminusi_power_series_range(a, mu, 0, 2 * v + 8, series);
    const CriterionRecord rec = decide_record(1, v, r_minus_i.front());
    if (rec.status != RecordStatus::fail || rec.lhs_is_bound ||
        rec.lhs_exponent != NormExponent(s - v)) {
      throw EngineFault("dominant term mu A did not determine ||R - I|| (got p^" +
                        rec.lhs_exponent.to_string() + ", expected p^" + std::to_string(s - v) + ")");
    }
    return ViolationWitness{1, v, rec.lhs_exponent, rec.rhs_exponent};
  }
  const MuRange range = search.range.value_or(default_mu_range(a));
  const std::int64_t target = search.target.value_or(default_target(search.max_k, range));
  const CriterionReport report =
      resolvent_contraction_check(a, range, search.max_k, target, search.criterion);
  for (const auto& rec : report.records) {
    if (rec.status == RecordStatus::fail) {
      return ViolationWitness{rec.k, rec.mu_valuation, rec.lhs_exponent, rec.rhs_exponent};
    }
  }
  return std::nullopt;
}

} // namespace padic
