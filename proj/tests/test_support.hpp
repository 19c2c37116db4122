#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "padic/matrix.hpp"
#include "padic/oracle.hpp"
#include "padic/scalar.hpp"

namespace testing_support {

using Rows = std::vector<std::vector<mpq_class>>;

inline mpq_class q(long num, long den = 1) {
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

inline mpq_class pow_q(long p, std::int64_t e) {
  mpq_class r = 1;
  for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) {
    r *= p;
  }
  return e < 0 ? mpq_class(1 / r) : r;
}

inline padic::PadicScalar scalar(const mpq_class& x, const padic::ContextPtr& ctx) {
  return padic::PadicScalar::from_rational(x, ctx);
}

inline padic::PadicMatrix matrix(const Rows& rows, const padic::ContextPtr& ctx) {
  return padic::PadicMatrix::from_rationals(ctx, rows);
}

inline padic::oracle::RationalMatrix rational(const Rows& rows) { return padic::oracle::RationalMatrix(rows); }

// Largest entry norm exponent of engine - exact; -inf on agreement.
inline padic::NormExponent distance(const padic::PadicMatrix& engine, const padic::oracle::RationalMatrix& exact) {
  padic::NormExponent worst = padic::NormExponent::neg_inf();
  for (std::size_t i = 0; i < exact.dim(); ++i) {
    for (std::size_t j = 0; j < exact.dim(); ++j) {
      const auto diff = engine(i, j) - scalar(exact(i, j), engine.context());
      worst = max(worst, diff.norm_exponent());
    }
  }
  return worst;
}

inline const Rows kUnipotent{{q(1), q(1)}, {q(0), q(1)}};

} // namespace testing_support
