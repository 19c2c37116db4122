#include "padic/identities.hpp"

#include <algorithm>

#include "padic/combinatorics.hpp"
#include "padic/errors.hpp"

namespace padic {

bool IdentitySuite::all_hold() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const IdentityCheck& c) { return c.residual.holds; });
}

NormExponent IdentitySuite::max_residual(const std::string& identity) const {
  NormExponent e = NormExponent::neg_inf();
  for (const auto& c : checks) {
    if (c.identity == identity) {
      e = max(e, c.residual.exponent);
    }
  }
  return e;
}

IdentitySuite verify_identities(const PadicMatrix& a, const PadicScalar& mu, std::uint64_t m_max,
                                std::uint64_t k_max, std::int64_t target,
                                const SeriesOptions& opts) {
  require_admissible(a, mu);
  const auto& ctx = a.context();
  const auto p = static_cast<std::uint64_t>(ctx->prime());
  const std::size_t n = a.dim();

  SeriesOptions lenient = opts;
  lenient.enforce_target = false;

  const std::int64_t s = a.is_zero() ? 0 : std::max<std::int64_t>(mat_norm(a).value(), 0);
  const std::int64_t v = mu.is_zero() ? 0 : mu.valuation().value();
  const auto depth = static_cast<std::int64_t>(std::max(m_max, k_max) + 2);
  // Products below consume up to depth * s digits; the divided S form needs (k+1) v more.
  const std::int64_t series_target = target + depth * s + depth * v;

  const CertifiedMatrix id = certify(PadicMatrix::identity(ctx, n));
  const CertifiedMatrix a_c = certify(a);
  const CertifiedMatrix mu_a = certify(mu * a);
  const CertifiedMatrix r = neumann_resolvent(a, mu, series_target, lenient).certified();
  const CertifiedMatrix r_minus_i = r - id;
  const auto binomial =
      rminusi_power_series_range(a, mu, std::max(m_max, k_max), series_target, lenient);

  IdentitySuite suite;
  auto record = [&](const char* name, std::uint64_t index, const CertifiedMatrix& lhs,
                    const CertifiedMatrix& rhs) {
    suite.checks.push_back({name, index, mu.valuation(), compare(lhs, rhs)});
  };

  PadicScalar mu_power = mu; // mu^(m+1)
  mpz_class m_factorial = 1;
  for (std::uint64_t m = 0; m <= m_max; ++m) {
    if (m > 0) {
      mu_power = mu_power * mu;
      m_factorial *= static_cast<unsigned long>(m);
    }
    const CertifiedMatrix lhs = binomial[m].certified();

    const CertifiedMatrix prev = m == 0 ? id : binomial[m - 1].certified();
    record("rminusi_product", m, lhs, mu_a * prev * r);

    const CertifiedMatrix derivative =
        m == 0 ? r : resolvent_derivative(a, mu, m, series_target, lenient).certified();
    const CertifiedMatrix a_derivative = a_c * derivative;
    const PadicScalar factorial = PadicScalar::from_integer(m_factorial, ctx);
    record("derivative_cleared", m, factorial * lhs, mu_power * a_derivative);

    const PadicScalar divided_coeff = mu_power / factorial;
    if (!mu.is_zero()) {
      const auto expected = static_cast<std::int64_t>(m + 1) * v -
                            static_cast<std::int64_t>(legendre_factorial_valuation(m, p));
      if (divided_coeff.valuation() != Valuation(expected)) {
        throw EngineFault("mu^(m+1)/m! has valuation " + divided_coeff.valuation().to_string() +
                          ", Legendre predicts " + std::to_string(expected));
      }
    }
    record("derivative_divided", m, lhs, divided_coeff * a_derivative);

    record("binomial_series", m, lhs, certified_pow(r_minus_i, m + 1));
  }

  const CertifiedMatrix i_minus_mu_a = id - mu_a;
  for (std::uint64_t k = 0; k <= k_max; ++k) {
    const SOperatorForms forms = s_operator_forms(a, mu, k, series_target, lenient);
    if (forms.divided) {
      suite.checks.push_back({"s_operator_forms", k, mu.valuation(), forms.agreement});
    }
    record("factorization", k, certify(mat_pow(a, k + 1)),
           certified_pow(i_minus_mu_a, k + 1) * forms.division_free.certified());
  }
  return suite;
}

} // namespace padic
