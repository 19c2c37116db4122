#include "padic/certified.hpp"

namespace padic {

CertifiedMatrix certify(PadicMatrix a) {
  const ExtInt e = precision_exponent(a);
  return {std::move(a), e};
}

CertifiedMatrix operator+(const CertifiedMatrix& x, const CertifiedMatrix& y) {
  PadicMatrix v = x.value + y.value;
  const ExtInt e = min(min(x.error_exponent, y.error_exponent), precision_exponent(v));
  return {std::move(v), e};
}

CertifiedMatrix operator-(const CertifiedMatrix& x, const CertifiedMatrix& y) {
  PadicMatrix v = x.value - y.value;
  const ExtInt e = min(min(x.error_exponent, y.error_exponent), precision_exponent(v));
  return {std::move(v), e};
}

CertifiedMatrix operator*(const CertifiedMatrix& x, const CertifiedMatrix& y) {
  PadicMatrix v = x.value * y.value;
  ExtInt e = min(x.error_exponent + y.value.min_valuation(),
                 y.error_exponent + x.value.min_valuation());
  e = min(e, x.error_exponent + y.error_exponent);
  e = min(e, precision_exponent(v));
  return {std::move(v), e};
}

CertifiedMatrix operator*(const PadicScalar& c, const CertifiedMatrix& x) {
  PadicMatrix v = c * x.value;
  // c itself may carry an error of p^(-abs precision).
  const ExtInt ec = c.absolute_precision();
  ExtInt e = min(x.error_exponent + c.valuation(), ec + x.value.min_valuation());
  e = min(e, ec + x.error_exponent);
  e = min(e, precision_exponent(v));
  return {std::move(v), e};
}

CertifiedMatrix certified_pow(const CertifiedMatrix& x, std::uint64_t n) {
  CertifiedMatrix result = certify(PadicMatrix::identity(x.value.context(), x.value.dim()));
  for (std::uint64_t i = 0; i < n; ++i) {
    result = result * x;
  }
  return result;
}

Residual compare(const CertifiedMatrix& lhs, const CertifiedMatrix& rhs) {
  Residual r;
  r.exponent = mat_norm(lhs.value - rhs.value);
  r.certificate = min(lhs.error_exponent, rhs.error_exponent);
  r.holds = r.exponent <= -r.certificate;
  return r;
}

} // namespace padic
