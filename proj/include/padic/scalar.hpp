#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "padic/context.hpp"
#include "padic/extended_int.hpp"

namespace padic {

// A p-adic number p^v * u with a unit u carried to N = working precision
// base-p digits, of which `certified_digits()` leading digits are guaranteed.
//
// Three regimes:
//   * exact zero: valuation +inf, no unit.
//   * certified_digits >= 1: the valuation is exact and the value is
//     p^v * (u mod p^k) + O(p^(v+k)).
//   * certified_digits == 0: only O(p^v) is known, the valuation is a lower
//     bound. This arises when an addition cancels every certified digit.
//
// Independently of the digit count, a value may be flagged exact: it equals
// p^v * lift(u) exactly, where lift(u) is the residue of u mod p^N in the
// symmetric range (-p^N/2, p^N/2). Exact values have unlimited absolute
// precision, so small integers and their sums, products and cancellations
// stay exact until they outgrow p^N/2.
//
// The canonical unit is reduced modulo p^k, so two values with the same digit
// state have identical representations.
class PadicScalar {
public:
  static PadicScalar zero(ContextPtr ctx);
  static PadicScalar from_integer(const mpz_class& n, ContextPtr ctx);
  // Throws InvalidInput when den == 0.
  static PadicScalar from_rational(const mpz_class& num, const mpz_class& den, ContextPtr ctx);
  static PadicScalar from_rational(const mpq_class& q, ContextPtr ctx);
  // Exact p^v.
  static PadicScalar prime_power(std::int64_t v, ContextPtr ctx);

  const ContextPtr& context() const { return ctx_; }

  Valuation valuation() const { return valuation_; }
  // Throws std::logic_error on zero.
  const mpz_class& unit() const;
  int certified_digits() const { return digits_; }

  bool is_zero() const { return valuation_.is_pos_inf(); }
  bool is_exact() const { return exact_; }
  // True for exact zero and for O(p^v) values.
  bool indistinguishable_from_zero() const { return is_zero() || digits_ == 0; }
  // The value is known modulo p^(absolute_precision); +inf for exact values.
  ExtInt absolute_precision() const;
  // |x| = p^(norm exponent); -inf for zero. An upper bound when no digit is certified.
  NormExponent norm_exponent() const { return -valuation_; }

  // p^v * lift(u) as an exact rational. For non-exact values this is the
  // representative the digits describe, not the (unknown) true value.
  mpq_class representative() const;
  // "num/den" of representative().
  std::string to_rational_string() const;
  // Diagnostic form "p^v * u (k digits)", or "0" for zero.
  std::string to_string() const;

  friend PadicScalar operator+(const PadicScalar& x, const PadicScalar& y);
  friend PadicScalar operator-(const PadicScalar& x, const PadicScalar& y);
  friend PadicScalar operator*(const PadicScalar& x, const PadicScalar& y);
  // Throws ArithmeticError for a zero divisor or one without certified digits.
  friend PadicScalar operator/(const PadicScalar& x, const PadicScalar& y);
  PadicScalar operator-() const;

  PadicScalar& operator+=(const PadicScalar& y) { return *this = *this + y; }
  PadicScalar& operator*=(const PadicScalar& y) { return *this = *this * y; }

  // Equality to certified precision: valuations agree and the units agree
  // on min(certified_digits) digits.
  friend bool certified_equal(const PadicScalar& x, const PadicScalar& y);

private:
  explicit PadicScalar(ContextPtr ctx) : ctx_(std::move(ctx)), valuation_(Valuation::pos_inf()) {}

  // p^shift * w for an integer w, exact when `exact_source` and w fits.
  static PadicScalar from_scaled_integer(mpz_class w, std::int64_t shift, bool exact_source,
                                         ContextPtr ctx);
  static PadicScalar big_o(std::int64_t v, ContextPtr ctx);
  mpz_class lift() const;

  ContextPtr ctx_;
  Valuation valuation_;
  mpz_class unit_;
  int digits_ = 0;
  bool exact_ = false;
};

PadicScalar neg(const PadicScalar& x);

// v_p(n) for n != 0; strips the factors from n.
std::int64_t remove_prime_factors(mpz_class& n, std::int64_t prime);

} // namespace padic
