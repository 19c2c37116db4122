#pragma once

#include <cstdint>

#include "padic/oracle.hpp"
#include "padic/resolvent.hpp"

namespace padic {

struct CrosscheckResult {
  // log_p of the largest entrywise |engine - oracle|; -inf on an exact match.
  NormExponent discrepancy_exponent = NormExponent::neg_inf();
  // The engine's tail certificate.
  ExtInt certificate = ExtInt::pos_inf();
  // discrepancy <= p^(-certificate)
  bool passes = true;
};

// Converts the oracle entries into the engine's context and compares.
// Throws InvalidInput on a dimension or prime mismatch.
CrosscheckResult crosscheck(const SeriesResult& engine, const oracle::RationalMatrix& exact,
                            std::int64_t prime);

} // namespace padic
