#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "padic/matrix_io.hpp"

namespace padic {

// Seeded generator of exact rational test matrices with prescribed entry
// valuations. Entries are p^v * u with u a random unit below p^digits (sign
// random) or zero; the same seed always yields the same sequence.
class MatrixSampler {
public:
  MatrixSampler(std::uint64_t seed, int digits = 12) : rng_(seed), digits_(digits) {}

  std::mt19937_64& engine() { return rng_; }

  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  // p^v * unit, v uniform in [v_lo, v_hi].
  mpq_class scalar(std::int64_t p, std::int64_t v_lo, std::int64_t v_hi);
  mpq_class unit(std::int64_t p);

  // Every entry has valuation >= 0 (zero entries with probability 1/8).
  MatrixFile contractive(std::int64_t p, std::size_t dim);
  // Entry valuations in [-3, 3] with at least one entry of valuation <= -1.
  MatrixFile non_contractive(std::int64_t p, std::size_t dim);

private:
  std::mt19937_64 rng_;
  int digits_;
};

// v_p of a nonzero rational.
std::int64_t exact_valuation(const mpq_class& q, std::int64_t p);

} // namespace padic
