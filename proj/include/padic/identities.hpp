#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "padic/certified.hpp"
#include "padic/resolvent.hpp"

namespace padic {

// One certified comparison of two evaluation routes for the same operator.
//
// Identities (R = R(mu, A), R^(m) its m-th derivative in mu):
//   rminusi_product      (R - I)^(m+1) = mu A (R - I)^m R
//   derivative_cleared   m! (R - I)^(m+1) = mu^(m+1) A R^(m)
//   derivative_divided   (R - I)^(m+1) = (mu^(m+1) / m!) A R^(m)
//   binomial_series      sum_{j>=m} C(j, m) (mu A)^(j+1) = (R - I)^(m+1)
//   s_operator_forms     (A R)^(k+1) = mu^(-k-1) (R - I)^(k+1)      (mu != 0)
//   factorization        A^(k+1) = (I - mu A)^(k+1) S_k(mu)
struct IdentityCheck {
  std::string identity;
  // m for the first four identities, k for the last two.
  std::uint64_t index = 0;
  Valuation mu_valuation = Valuation::pos_inf();
  Residual residual;
};

struct IdentitySuite {
  std::vector<IdentityCheck> checks;

  bool all_hold() const;
  // Largest residual exponent recorded for the named identity (-inf if none).
  NormExponent max_residual(const std::string& identity) const;
};

// Evaluates every identity for m = 0..m_max and k = 0..k_max. The series are
// requested at `target` plus the slack the subsequent products consume.
IdentitySuite verify_identities(const PadicMatrix& a, const PadicScalar& mu, std::uint64_t m_max,
                                std::uint64_t k_max, std::int64_t target,
                                const SeriesOptions& opts = {});

} // namespace padic
