#include "padic/combinatorics.hpp"

#include <stdexcept>
#include <string>

#include "padic/errors.hpp"

namespace padic {

namespace {

void require_base(std::uint64_t p) {
  if (p < 2) {
    throw InvalidInput("valuation base must be >= 2");
  }
}

} // namespace

std::uint64_t digit_sum(std::uint64_t n, std::uint64_t p) {
  require_base(p);
  std::uint64_t s = 0;
  for (; n > 0; n /= p) {
    s += n % p;
  }
  return s;
}

std::uint64_t legendre_factorial_valuation(std::uint64_t m, std::uint64_t p) {
  require_base(p);
  std::uint64_t by_floors = 0;
  for (std::uint64_t q = m / p; q > 0; q /= p) {
    by_floors += q;
  }
  const std::uint64_t by_digits = (m - digit_sum(m, p)) / (p - 1);
  if (by_floors != by_digits) {
    throw std::logic_error("Legendre formulas disagree for m=" + std::to_string(m));
  }
  return by_floors;
}

std::uint64_t kummer_binomial_valuation(std::uint64_t j, std::uint64_t m, std::uint64_t p) {
  require_base(p);
  if (m > j) {
    throw InvalidInput("binomial valuation needs m <= j (got m=" + std::to_string(m) +
                       ", j=" + std::to_string(j) + ")");
  }
  std::uint64_t a = m;
  std::uint64_t b = j - m;
  std::uint64_t carry = 0;
  std::uint64_t carries = 0;
  while (a > 0 || b > 0 || carry > 0) {
    const std::uint64_t digit = a % p + b % p + carry;
    carry = digit >= p ? 1 : 0;
    carries += carry;
    a /= p;
    b /= p;
  }
  const std::uint64_t by_legendre = legendre_factorial_valuation(j, p) -
                                    legendre_factorial_valuation(m, p) -
                                    legendre_factorial_valuation(j - m, p);
  if (carries != by_legendre) {
    throw std::logic_error("Kummer carry count disagrees with Legendre for C(" +
                           std::to_string(j) + "," + std::to_string(m) + ")");
  }
  return carries;
}

} // namespace padic
