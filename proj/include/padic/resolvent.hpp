#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "padic/certified.hpp"
#include "padic/matrix.hpp"

namespace padic {

// A truncated series value with an exact tail certificate:
//   ||true value - value|| <= p^(-tail_bound_exponent).
// The certificate accounts for the dropped tail and for the digits lost in
// the arithmetic, whichever is weaker.
struct SeriesResult {
  PadicMatrix value;
  std::uint64_t truncation_order = 0;
  ExtInt tail_bound_exponent = ExtInt::pos_inf();
  bool converged = false;

  CertifiedMatrix certified() const { return {value, tail_bound_exponent}; }
};

struct SeriesOptions {
  // Test hook: the Neumann series silently omits its last retained term but
  // still reports the full certificate. Every identity and oracle check
  // downstream must notice.
  bool inject_truncation_fault = false;
  // When false, a certificate short of the target is reported through
  // SeriesResult::converged instead of a PrecisionError.
  bool enforce_target = true;
};

// Least integer v such that every mu with v(mu) >= v lies in the certified
// convergence ball, using ||A^j|| <= ||A||^j: s + 1 for s = log_p ||A|| >= 0,
// and 1 when ||A|| < 1 or A = 0.
std::int64_t admissible_radius(const PadicMatrix& a);

// Throws DomainError when mu is nonzero, A is nonzero and v(mu) < admissible_radius(A).
void require_admissible(const PadicMatrix& a, const PadicScalar& mu);

// R(mu, A) = (I - mu A)^{-1} = sum_{j>=0} mu^j A^j.
//
// All series functions below pick the smallest truncation order whose
// conservative tail bound reaches `target`, throw DomainError for an
// inadmissible mu, and throw PrecisionError (naming the achievable exponent)
// when the working precision cannot deliver `target`.
SeriesResult neumann_resolvent(const PadicMatrix& a, const PadicScalar& mu, std::int64_t target,
                               const SeriesOptions& opts = {});

// R^(m)(mu, A) = sum_{j>=m} m! C(j, m) mu^(j-m) A^j, m >= 1.
SeriesResult resolvent_derivative(const PadicMatrix& a, const PadicScalar& mu, std::uint64_t m,
                                  std::int64_t target, const SeriesOptions& opts = {});

// (R(mu, A) - I)^(m+1) = sum_{j>=m} C(j, m) (mu A)^(j+1).
SeriesResult rminusi_power_series(const PadicMatrix& a, const PadicScalar& mu, std::uint64_t m,
                                  std::int64_t target, const SeriesOptions& opts = {});

// rminusi_power_series for every m in [0, m_max], sharing the powers (mu A)^j.
// Never throws PrecisionError: entries whose certificate falls short of
// `target` come back with converged = false.
std::vector<SeriesResult> rminusi_power_series_range(const PadicMatrix& a, const PadicScalar& mu,
                                                     std::uint64_t m_max, std::int64_t target,
                                                     const SeriesOptions& opts = {});

// S_k(mu) = (A R(mu, A))^(k+1). For mu != 0 this equals
// mu^(-k-1) (R(mu, A) - I)^(k+1); both forms are evaluated and compared.
struct SOperatorForms {
  SeriesResult division_free;
  // Absent for mu == 0, where the divided form is undefined.
  std::optional<SeriesResult> divided;
  Residual agreement;
};

// Never throws PrecisionError or EngineFault; callers inspect the fields.
SOperatorForms s_operator_forms(const PadicMatrix& a, const PadicScalar& mu, std::uint64_t k,
                                std::int64_t target, const SeriesOptions& opts = {});

// The division-free form. Throws EngineFault when the two forms disagree
// beyond their certificates.
SeriesResult s_operator(const PadicMatrix& a, const PadicScalar& mu, std::uint64_t k,
                        std::int64_t target, const SeriesOptions& opts = {});

} // namespace padic
