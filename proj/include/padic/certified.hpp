#pragma once

#include <cstdint>

#include "padic/matrix.hpp"

namespace padic {

// A computed matrix together with a bound on its distance to the quantity it
// approximates: ||truth - value|| <= p^(-error_exponent). The bound covers
// both series truncation and the digits lost in the scalar arithmetic.
struct CertifiedMatrix {
  PadicMatrix value;
  ExtInt error_exponent = ExtInt::pos_inf();
};

// Wraps a matrix whose only uncertainty is its digit precision.
CertifiedMatrix certify(PadicMatrix a);

// Error propagation uses the ultrametric product rule
//   ||XY - X0 Y0|| <= max(||X0|| ||Ey||, ||Ex|| ||Y0||, ||Ex|| ||Ey||)
// and the sum rule ||Ex + Ey|| <= max(||Ex||, ||Ey||).
CertifiedMatrix operator+(const CertifiedMatrix& x, const CertifiedMatrix& y);
CertifiedMatrix operator-(const CertifiedMatrix& x, const CertifiedMatrix& y);
CertifiedMatrix operator*(const CertifiedMatrix& x, const CertifiedMatrix& y);
CertifiedMatrix operator*(const PadicScalar& c, const CertifiedMatrix& x);
CertifiedMatrix certified_pow(const CertifiedMatrix& x, std::uint64_t n);

// Outcome of comparing two certified evaluations of the same quantity.
struct Residual {
  // Norm exponent of value(lhs) - value(rhs); -inf when they coincide exactly.
  NormExponent exponent = NormExponent::neg_inf();
  // min of the two error exponents: the residual is acceptable iff its norm is
  // at most p^(-certificate).
  ExtInt certificate = ExtInt::pos_inf();
  bool holds = true;
};

Residual compare(const CertifiedMatrix& lhs, const CertifiedMatrix& rhs);

} // namespace padic
