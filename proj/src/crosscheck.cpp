#include "padic/crosscheck.hpp"

namespace padic {

CrosscheckResult crosscheck(const SeriesResult& engine, const oracle::RationalMatrix& exact,
                            std::int64_t prime) {
  const auto& ctx = engine.value.context();
  if (ctx->prime() != prime) {
    throw InvalidInput("crosscheck: engine prime " + std::to_string(ctx->prime()) +
                       " differs from " + std::to_string(prime));
  }
  if (engine.value.dim() != exact.dim()) {
    throw InvalidInput("crosscheck: dimension mismatch");
  }
  CrosscheckResult result;
  result.certificate = engine.tail_bound_exponent;
  for (std::size_t i = 0; i < exact.dim(); ++i) {
    for (std::size_t j = 0; j < exact.dim(); ++j) {
      const PadicScalar diff = engine.value(i, j) - PadicScalar::from_rational(exact(i, j), ctx);
      result.discrepancy_exponent = max(result.discrepancy_exponent, diff.norm_exponent());
    }
  }
  result.passes = result.discrepancy_exponent <= -result.certificate;
  return result;
}

} // namespace padic
