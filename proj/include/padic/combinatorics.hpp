#pragma once

#include <cstdint>

namespace padic {

// Sum of the base-p digits of n.
std::uint64_t digit_sum(std::uint64_t n, std::uint64_t p);

// v_p(m!) by Legendre's formula sum_i floor(m / p^i), cross-checked against
// (m - s_p(m)) / (p - 1). A mismatch throws std::logic_error.
std::uint64_t legendre_factorial_valuation(std::uint64_t m, std::uint64_t p);

// v_p(C(j, m)) as the number of carries when adding m and j - m in base p
// (Kummer), cross-checked against the Legendre difference. Always >= 0, so
// |C(j, m)|_p <= 1. Throws InvalidInput when m > j.
std::uint64_t kummer_binomial_valuation(std::uint64_t j, std::uint64_t m, std::uint64_t p);

} // namespace padic
