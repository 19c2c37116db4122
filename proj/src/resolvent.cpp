#include "padic/resolvent.hpp"

#include <algorithm>
#include <string>

#include "padic/combinatorics.hpp"
#include "padic/errors.hpp"

namespace padic {

namespace {

// Smallest n >= 0 with n * step >= bound, step > 0.
std::int64_t ceil_div_nonneg(std::int64_t bound, std::int64_t step) {
  if (bound <= 0) {
    return 0;
  }
  return (bound + step - 1) / step;
}

// Degenerate inputs (A = 0 or mu = 0) leave finitely many nonzero terms.
bool degenerate(const PadicMatrix& a, const PadicScalar& mu) { return a.is_zero() || mu.is_zero(); }

// v(mu) - log_p ||A||: every additional power of mu A gains at least this much valuation.
std::int64_t decay_rate(const PadicMatrix& a, const PadicScalar& mu) {
  return mu.valuation().value() - mat_norm(a).value();
}

void finalize(SeriesResult& r, ExtInt truncation_exponent, std::int64_t target, bool strict,
              const char* what) {
  r.tail_bound_exponent = min(truncation_exponent, precision_exponent(r.value));
  r.converged = r.tail_bound_exponent >= ExtInt(target);
  if (strict && !r.converged) {
    throw PrecisionError(std::string(what) + ": certificate below target " + std::to_string(target),
                         r.tail_bound_exponent);
  }
}

void require_same(const PadicMatrix& a, const PadicScalar& mu) {
  if (!same_context(a.context(), mu.context())) {
    throw InvalidInput("matrix and series parameter from different p-adic contexts");
  }
}

SeriesResult neumann_impl(const PadicMatrix& a, const PadicScalar& mu, std::int64_t target,
                          const SeriesOptions& opts) {
  const bool strict = opts.enforce_target;
  require_same(a, mu);
  require_admissible(a, mu);
  const auto& ctx = a.context();
  SeriesResult r{PadicMatrix::identity(ctx, a.dim()), 0, ExtInt::pos_inf(), true};
  if (degenerate(a, mu)) {
    finalize(r, ExtInt::pos_inf(), target, strict, "neumann_resolvent");
    return r;
  }
  const std::int64_t d = decay_rate(a, mu);
  const std::int64_t order = std::max<std::int64_t>(0, ceil_div_nonneg(target, d) - 1);
  const PadicMatrix mu_a = mu * a;
  PadicMatrix term = PadicMatrix::identity(ctx, a.dim());
  ExtInt truncation = ExtInt((order + 1) * d);
  std::int64_t j = 1;
  for (; j <= order; ++j) {
    term = term * mu_a;
    if (term.is_zero()) {
      truncation = ExtInt::pos_inf();
      break;
    }
    if (opts.inject_truncation_fault && j == order) {
      break;
    }
    r.value = r.value + term;
  }
  r.truncation_order = static_cast<std::uint64_t>(std::min(j, order));
  finalize(r, truncation, target, strict, "neumann_resolvent");
  return r;
}

SeriesResult derivative_impl(const PadicMatrix& a, const PadicScalar& mu, std::uint64_t m,
                             std::int64_t target, const SeriesOptions& opts) {
  const bool strict = opts.enforce_target;
  require_same(a, mu);
  if (m == 0) {
    throw InvalidInput("resolvent_derivative needs m >= 1");
  }
  require_admissible(a, mu);
  const auto& ctx = a.context();
  const PadicMatrix a_m = mat_pow(a, m);
  mpz_class m_factorial;
  mpz_fac_ui(m_factorial.get_mpz_t(), m);
  SeriesResult r{PadicScalar::from_integer(m_factorial, ctx) * a_m, m, ExtInt::pos_inf(), true};
  if (degenerate(a, mu) || a_m.is_zero()) {
    finalize(r, ExtInt::pos_inf(), target, strict, "resolvent_derivative");
    return r;
  }
  const std::int64_t d = decay_rate(a, mu);
  const std::int64_t v = mu.valuation().value();
  const auto mi = static_cast<std::int64_t>(m);
  const auto lf = static_cast<std::int64_t>(
      legendre_factorial_valuation(m, static_cast<std::uint64_t>(ctx->prime())));
  // Term j has valuation >= v_p(m!) + j (v - s) - m v.
  const std::int64_t order = std::max(mi, ceil_div_nonneg(target + mi * v - lf, d) - 1);
  const PadicMatrix mu_a = mu * a;
  PadicMatrix scaled_power = a_m; // mu^(j-m) A^j
  mpz_class coeff = m_factorial;  // j! / (j-m)!
  ExtInt truncation = ExtInt((order + 1) * d - mi * v + lf);
  std::int64_t j = mi + 1;
  for (; j <= order; ++j) {
    scaled_power = scaled_power * mu_a;
    if (scaled_power.is_zero()) {
      truncation = ExtInt::pos_inf();
      break;
    }
    coeff = coeff * j / (j - mi);
    r.value = r.value + PadicScalar::from_integer(coeff, ctx) * scaled_power;
  }
  r.truncation_order = static_cast<std::uint64_t>(std::min(j, order));
  finalize(r, truncation, target, strict, "resolvent_derivative");
  return r;
}

} // namespace

std::int64_t admissible_radius(const PadicMatrix& a) {
  if (a.is_zero()) {
    return 1;
  }
  const std::int64_t s = mat_norm(a).value();
  return s >= 0 ? s + 1 : 1;
}

void require_admissible(const PadicMatrix& a, const PadicScalar& mu) {
  if (mu.is_zero() || a.is_zero()) {
    return;
  }
  if (mu.certified_digits() == 0) {
    throw InvalidInput("series parameter has no certified digits");
  }
  const std::int64_t radius = admissible_radius(a);
  if (mu.valuation().value() < radius) {
    throw DomainError("v(mu) = " + std::to_string(mu.valuation().value()) +
                      " is outside the certified convergence ball (need v(mu) >= " +
                      std::to_string(radius) + ")");
  }
}

SeriesResult neumann_resolvent(const PadicMatrix& a, const PadicScalar& mu, std::int64_t target,
                               const SeriesOptions& opts) {
  return neumann_impl(a, mu, target, opts);
}

SeriesResult resolvent_derivative(const PadicMatrix& a, const PadicScalar& mu, std::uint64_t m,
                                  std::int64_t target, const SeriesOptions& opts) {
  return derivative_impl(a, mu, m, target, opts);
}

std::vector<SeriesResult> rminusi_power_series_range(const PadicMatrix& a, const PadicScalar& mu,
                                                     std::uint64_t m_max, std::int64_t target,
                                                     const SeriesOptions&) {
  require_same(a, mu);
  require_admissible(a, mu);
  const auto& ctx = a.context();
  std::vector<SeriesResult> out;
  out.reserve(m_max + 1);
  if (degenerate(a, mu)) {
    for (std::uint64_t m = 0; m <= m_max; ++m) {
      SeriesResult r{PadicMatrix::zero(ctx, a.dim()), m, ExtInt::pos_inf(), true};
      finalize(r, ExtInt::pos_inf(), target, false, "rminusi_power_series");
      out.push_back(std::move(r));
    }
    return out;
  }
  const std::int64_t d = decay_rate(a, mu);
  // Term j has valuation >= (j + 1)(v - s); the first dropped term is j = order + 1.
  const std::int64_t base_order = ceil_div_nonneg(target, d) - 2;
  const auto last_order = std::max<std::int64_t>(base_order, static_cast<std::int64_t>(m_max));

  // powers[j] = (mu A)^(j+1); stops early once a power vanishes exactly.
  const PadicMatrix mu_a = mu * a;
  std::vector<PadicMatrix> powers{mu_a};
  bool vanished = false;
  while (static_cast<std::int64_t>(powers.size()) <= last_order) {
    PadicMatrix next = powers.back() * mu_a;
    if (next.is_zero()) {
      vanished = true;
      break;
    }
    powers.push_back(std::move(next));
  }
  const auto available = static_cast<std::int64_t>(powers.size());

  for (std::uint64_t m = 0; m <= m_max; ++m) {
    const auto mi = static_cast<std::int64_t>(m);
    const std::int64_t order = std::max(base_order, mi);
    SeriesResult r{PadicMatrix::zero(ctx, a.dim()), static_cast<std::uint64_t>(order),
                   ExtInt::pos_inf(), true};
    const std::int64_t stop = std::min(order, available - 1);
    mpz_class coeff = 1; // C(j, m)
    for (std::int64_t j = mi; j <= stop; ++j) {
      if (j > mi) {
        coeff = coeff * j / (j - mi);
      }
      r.value = r.value + (coeff == 1 ? powers[static_cast<std::size_t>(j)]
                                      : PadicScalar::from_integer(coeff, ctx) *
                                            powers[static_cast<std::size_t>(j)]);
    }
    const bool exact_tail = vanished && order >= available - 1;
    if (exact_tail) {
      r.truncation_order = static_cast<std::uint64_t>(std::max(mi, available - 1));
    }
    finalize(r, exact_tail ? ExtInt::pos_inf() : ExtInt((order + 2) * d), target, false,
             "rminusi_power_series");
    out.push_back(std::move(r));
  }
  return out;
}

SeriesResult rminusi_power_series(const PadicMatrix& a, const PadicScalar& mu, std::uint64_t m,
                                  std::int64_t target, const SeriesOptions& opts) {
  auto all = rminusi_power_series_range(a, mu, m, target, opts);
  SeriesResult r = std::move(all.back());
  if (opts.enforce_target && !r.converged) {
    throw PrecisionError("rminusi_power_series: certificate below target " + std::to_string(target),
                         r.tail_bound_exponent);
  }
  return r;
}

SOperatorForms s_operator_forms(const PadicMatrix& a, const PadicScalar& mu, std::uint64_t k,
                                std::int64_t target, const SeriesOptions& opts) {
  require_same(a, mu);
  require_admissible(a, mu);
  const auto& ctx = a.context();
  const std::uint64_t n = k + 1;
  SOperatorForms forms{{PadicMatrix::zero(ctx, a.dim()), 0, ExtInt::pos_inf(), true}, {}, {}};
  if (a.is_zero()) {
    finalize(forms.division_free, ExtInt::pos_inf(), target, false, "s_operator");
    if (!mu.is_zero()) {
      forms.divided = forms.division_free;
    }
    return forms;
  }
  const std::int64_t s = mat_norm(a).value();
  // (A R)^n loses up to n * s digits of absolute precision against R.
  const std::int64_t boost = static_cast<std::int64_t>(n) * std::max<std::int64_t>(s, 0);
  SeriesOptions lenient = opts;
  lenient.enforce_target = false;
  const SeriesResult r = neumann_impl(a, mu, target + boost, lenient);
  const CertifiedMatrix s_k = certified_pow(certify(a) * r.certified(), n);
  forms.division_free.value = s_k.value;
  forms.division_free.truncation_order = r.truncation_order;
  finalize(forms.division_free, s_k.error_exponent, target, false, "s_operator");

  if (!mu.is_zero()) {
    const std::int64_t v = mu.valuation().value();
    const auto w = rminusi_power_series_range(a, mu, k, target + static_cast<std::int64_t>(n) * v,
                                              opts);
    PadicScalar mu_n = PadicScalar::from_integer(1, ctx);
    for (std::uint64_t i = 0; i < n; ++i) {
      mu_n = mu_n * mu;
    }
    const CertifiedMatrix divided =
        (PadicScalar::from_integer(1, ctx) / mu_n) * w.back().certified();
    SeriesResult alt{divided.value, w.back().truncation_order, ExtInt::pos_inf(), true};
    finalize(alt, divided.error_exponent, target, false, "s_operator");
    forms.divided = std::move(alt);
    forms.agreement = compare(forms.division_free.certified(), forms.divided->certified());
  }
  return forms;
}

SeriesResult s_operator(const PadicMatrix& a, const PadicScalar& mu, std::uint64_t k,
                        std::int64_t target, const SeriesOptions& opts) {
  SOperatorForms forms = s_operator_forms(a, mu, k, target, opts);
  if (!forms.agreement.holds) {
    throw EngineFault("s_operator: (A R)^(k+1) and mu^(-k-1) (R - I)^(k+1) disagree (residual p^" +
                      forms.agreement.exponent.to_string() + ", certificate p^-" +
                      forms.agreement.certificate.to_string() + ")");
  }
  if (!forms.division_free.converged) {
    throw PrecisionError("s_operator: certificate below target " + std::to_string(target),
                         forms.division_free.tail_bound_exponent);
  }
  return std::move(forms.division_free);
}

} // namespace padic
