#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "padic/errors.hpp"
#include "padic/extended_int.hpp"

// Exact rational linear algebra over arbitrary-precision integers. Shares no
// code with the p-adic series engine and serves as its ground truth.
namespace padic::oracle {

class SingularityError : public Error {
public:
  using Error::Error;
};

class RationalMatrix {
public:
  // n x n zero matrix; n >= 1.
  explicit RationalMatrix(std::size_t n);
  // Rows must be square.
  explicit RationalMatrix(const std::vector<std::vector<mpq_class>>& rows);
  static RationalMatrix identity(std::size_t n);

  std::size_t dim() const { return n_; }
  const mpq_class& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  mpq_class& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  // Entries are kept canonical (reduced, positive denominator).
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

private:
  std::size_t n_;
  std::vector<mpq_class> entries_;
};

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const mpq_class& c, const RationalMatrix& a);
RationalMatrix power(const RationalMatrix& a, std::uint64_t m);

// v_p(q); +inf for q = 0.
Valuation rational_valuation(const mpq_class& q, std::int64_t p);

// Exact inverse by Gauss-Jordan elimination. The pivot in each column is the
// candidate of largest p-adic norm (smallest v_p); ties go to the lowest row.
// Throws SingularityError when the matrix is singular.
RationalMatrix inverse(const RationalMatrix& m, std::int64_t pivot_prime);

// (I - mu A)^{-1}. Throws SingularityError naming mu when I - mu A is singular.
RationalMatrix exact_resolvent(const RationalMatrix& a, const mpq_class& mu, std::int64_t pivot_prime);

// d^m/dmu^m (I - mu A)^{-1} = m! (R A)^m R, m >= 1.
RationalMatrix exact_resolvent_derivative(const RationalMatrix& a, const mpq_class& mu,
                                          std::uint64_t m, std::int64_t pivot_prime);

} // namespace padic::oracle
