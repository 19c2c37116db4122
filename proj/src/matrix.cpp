#include "padic/matrix.hpp"

#include <algorithm>

#include "padic/errors.hpp"

namespace padic {

namespace {

void require_compatible(const PadicMatrix& a, const PadicMatrix& b) {
  if (a.dim() != b.dim()) {
    throw InvalidInput("matrix dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                       std::to_string(b.dim()));
  }
  if (!same_context(a.context(), b.context())) {
    throw InvalidInput("matrices from different p-adic contexts");
  }
}

} // namespace

PadicMatrix::PadicMatrix(ContextPtr ctx, std::size_t n) : ctx_(std::move(ctx)), n_(n) {
  if (!ctx_) {
    throw InvalidInput("p-adic matrix requires a context");
  }
  if (n == 0) {
    throw InvalidInput("matrix dimension must be >= 1");
  }
  entries_.assign(n * n, PadicScalar::zero(ctx_));
}

PadicMatrix PadicMatrix::identity(ContextPtr ctx, std::size_t n) {
  PadicMatrix id(ctx, n);
  const PadicScalar one = PadicScalar::from_integer(1, ctx);
  for (std::size_t i = 0; i < n; ++i) {
    id(i, i) = one;
  }
  return id;
}

PadicMatrix PadicMatrix::from_rationals(ContextPtr ctx,
                                        const std::vector<std::vector<mpq_class>>& rows) {
  PadicMatrix a(ctx, rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw InvalidInput("matrix row " + std::to_string(i) + " has " +
                         std::to_string(rows[i].size()) + " entries, expected " +
                         std::to_string(rows.size()));
    }
    for (std::size_t j = 0; j < rows.size(); ++j) {
      a(i, j) = PadicScalar::from_rational(rows[i][j], ctx);
    }
  }
  return a;
}

Valuation PadicMatrix::min_valuation() const {
  Valuation v = Valuation::pos_inf();
  for (const auto& x : entries_) {
    v = min(v, x.valuation());
  }
  return v;
}

NormExponent mat_norm(const PadicMatrix& a) { return -a.min_valuation(); }

NormExponent vec_norm(std::span<const PadicScalar> x) {
  NormExponent e = NormExponent::neg_inf();
  for (const auto& xi : x) {
    e = max(e, xi.norm_exponent());
  }
  return e;
}

ExtInt precision_exponent(const PadicMatrix& a) {
  ExtInt e = ExtInt::pos_inf();
  for (const auto& x : a.entries()) {
    e = min(e, x.absolute_precision());
  }
  return e;
}

int min_certified_digits(const PadicMatrix& a) {
  int k = a.context()->precision();
  for (const auto& x : a.entries()) {
    if (!x.is_zero()) {
      k = std::min(k, x.certified_digits());
    }
  }
  return k;
}

PadicMatrix operator+(const PadicMatrix& a, const PadicMatrix& b) {
  require_compatible(a, b);
  PadicMatrix c(a.context(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      c(i, j) = a(i, j) + b(i, j);
    }
  }
  return c;
}

PadicMatrix operator-(const PadicMatrix& a, const PadicMatrix& b) {
  require_compatible(a, b);
  PadicMatrix c(a.context(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      c(i, j) = a(i, j) - b(i, j);
    }
  }
  return c;
}

PadicMatrix operator*(const PadicMatrix& a, const PadicMatrix& b) {
  require_compatible(a, b);
  const std::size_t n = a.dim();
  PadicMatrix c(a.context(), n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const PadicScalar& aik = a(i, k);
      if (aik.is_zero()) {
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (!b(k, j).is_zero()) {
          c(i, j) += aik * b(k, j);
        }
      }
    }
  }
  return c;
}

PadicMatrix operator*(const PadicScalar& s, const PadicMatrix& a) {
  if (!same_context(s.context(), a.context())) {
    throw InvalidInput("scalar and matrix from different p-adic contexts");
  }
  PadicMatrix c(a.context(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      c(i, j) = s * a(i, j);
    }
  }
  return c;
}

PadicMatrix mat_pow(const PadicMatrix& a, std::uint64_t m) {
  PadicMatrix result = PadicMatrix::identity(a.context(), a.dim());
  PadicMatrix base = a;
  while (m > 0) {
    if (m & 1U) {
      result = result * base;
    }
    m >>= 1U;
    if (m > 0) {
      base = base * base;
    }
  }
  return result;
}

std::vector<PadicScalar> mat_vec(const PadicMatrix& a, std::span<const PadicScalar> x) {
  if (x.size() != a.dim()) {
    throw InvalidInput("vector length does not match matrix dimension");
  }
  std::vector<PadicScalar> y(a.dim(), PadicScalar::zero(a.context()));
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      y[i] += a(i, j) * x[j];
    }
  }
  return y;
}

PowerContractionReport power_contraction_check(const PadicMatrix& a, std::uint64_t max_power) {
  if (max_power == 0) {
    throw InvalidInput("power contraction check needs M >= 1");
  }
  PowerContractionReport report;
  report.exponents.reserve(max_power);
  PadicMatrix power = a;
  for (std::uint64_t m = 1; m <= max_power; ++m) {
    if (m > 1) {
      power = power * a;
    }
    const NormExponent e = mat_norm(power);
    report.exponents.push_back(e);
    report.verdict = report.verdict && e <= NormExponent(0);
  }
  report.first_power_verdict = report.exponents.front() <= NormExponent(0);
  report.note = "||A^m|| <= ||A||^m for the sup norm: the verdict over all m equals the m=1 verdict";
  return report;
}

} // namespace padic
