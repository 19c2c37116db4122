#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "padic/context.hpp"
#include "padic/extended_int.hpp"
#include "padic/scalar.hpp"

namespace padic {

// Square matrix over Q_p acting on Q_p^n with the sup norm. The induced
// operator norm is the largest entry norm, so ||A|| = p^(-min_ij v(a_ij)).
class PadicMatrix {
public:
  // The n x n zero matrix. Throws InvalidInput when n == 0.
  PadicMatrix(ContextPtr ctx, std::size_t n);

  static PadicMatrix zero(ContextPtr ctx, std::size_t n) { return PadicMatrix(std::move(ctx), n); }
  static PadicMatrix identity(ContextPtr ctx, std::size_t n);
  // Rows must be square and non-empty.
  static PadicMatrix from_rationals(ContextPtr ctx, const std::vector<std::vector<mpq_class>>& rows);

  const ContextPtr& context() const { return ctx_; }
  std::size_t dim() const { return n_; }

  const PadicScalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  PadicScalar& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  std::span<const PadicScalar> entries() const { return entries_; }

  // min over entries of v(a_ij); +inf for the zero matrix.
  Valuation min_valuation() const;
  bool is_zero() const { return min_valuation().is_pos_inf(); }

private:
  ContextPtr ctx_;
  std::size_t n_;
  std::vector<PadicScalar> entries_;
};

// e with ||A|| = p^e; -inf for the zero matrix.
NormExponent mat_norm(const PadicMatrix& a);
// Sup norm of a vector.
NormExponent vec_norm(std::span<const PadicScalar> x);
// Every entry is known modulo p^(result); +inf when all entries are exact.
ExtInt precision_exponent(const PadicMatrix& a);
// Worst certified digit count over the nonzero entries (N for the zero matrix).
int min_certified_digits(const PadicMatrix& a);

PadicMatrix operator+(const PadicMatrix& a, const PadicMatrix& b);
PadicMatrix operator-(const PadicMatrix& a, const PadicMatrix& b);
PadicMatrix operator*(const PadicMatrix& a, const PadicMatrix& b);
PadicMatrix operator*(const PadicScalar& c, const PadicMatrix& a);
inline PadicMatrix mat_add(const PadicMatrix& a, const PadicMatrix& b) { return a + b; }
inline PadicMatrix mat_mul(const PadicMatrix& a, const PadicMatrix& b) { return a * b; }
inline PadicMatrix scalar_mul(const PadicScalar& c, const PadicMatrix& a) { return c * a; }
// Repeated squaring; mat_pow(A, 0) = I.
PadicMatrix mat_pow(const PadicMatrix& a, std::uint64_t m);
std::vector<PadicScalar> mat_vec(const PadicMatrix& a, std::span<const PadicScalar> x);

struct PowerContractionReport {
  // exponents[m - 1] = e with ||A^m|| <= p^e, m = 1..M.
  std::vector<NormExponent> exponents;
  bool verdict = true;
  // Over the sup norm ||A^m|| <= ||A||^m, so the verdict for every m is
  // already decided by m = 1.
  bool first_power_verdict = true;
  std::string note;
};

// Computes ||A^m|| for m = 1..M. Throws InvalidInput when M == 0.
PowerContractionReport power_contraction_check(const PadicMatrix& a, std::uint64_t max_power);

} // namespace padic
