#include "padic/random.hpp"

#include "padic/errors.hpp"
#include "padic/scalar.hpp"

namespace padic {

std::int64_t MatrixSampler::uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
}

mpq_class MatrixSampler::unit(std::int64_t p) {
  mpz_class u = 0;
  for (int i = 0; i < digits_; ++i) {
    u = u * static_cast<long>(p) + static_cast<long>(uniform(0, p - 1));
  }
  u = u * static_cast<long>(p) + static_cast<long>(uniform(1, p - 1));
  if (uniform(0, 1) == 1) {
    u = -u;
  }
  return mpq_class(u);
}

mpq_class MatrixSampler::scalar(std::int64_t p, std::int64_t v_lo, std::int64_t v_hi) {
  const std::int64_t v = uniform(v_lo, v_hi);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(v < 0 ? -v : v));
  mpq_class q = unit(p);
  if (v >= 0) {
    q *= scale;
  } else {
    q /= scale;
  }
  q.canonicalize();
  return q;
}

MatrixFile MatrixSampler::contractive(std::int64_t p, std::size_t dim) {
  MatrixFile file{p, dim, std::vector<std::vector<mpq_class>>(dim, std::vector<mpq_class>(dim))};
  for (auto& row : file.entries) {
    for (auto& entry : row) {
      entry = uniform(0, 7) == 0 ? mpq_class(0) : scalar(p, 0, 3);
    }
  }
  return file;
}

MatrixFile MatrixSampler::non_contractive(std::int64_t p, std::size_t dim) {
  MatrixFile file{p, dim, std::vector<std::vector<mpq_class>>(dim, std::vector<mpq_class>(dim))};
  for (auto& row : file.entries) {
    for (auto& entry : row) {
      entry = uniform(0, 7) == 0 ? mpq_class(0) : scalar(p, -3, 3);
    }
  }
  const auto i = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(dim) - 1));
  const auto j = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(dim) - 1));
  file.entries[i][j] = scalar(p, -3, -1);
  return file;
}

std::int64_t exact_valuation(const mpq_class& q, std::int64_t p) {
  if (q == 0) {
    throw InvalidInput("exact_valuation: zero has infinite valuation");
  }
  mpz_class num = q.get_num();
  mpz_class den = q.get_den();
  return remove_prime_factors(num, p) - remove_prime_factors(den, p);
}

} // namespace padic
