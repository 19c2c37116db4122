#include "padic/context.hpp"

#include <string>

#include "padic/errors.hpp"

namespace padic {

bool is_prime(std::int64_t n) {
  if (n < 2) {
    return false;
  }
  for (std::int64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

PadicContext::PadicContext(std::int64_t prime, int precision) : prime_(prime), precision_(precision) {
  if (!is_prime(prime)) {
    throw InvalidInput("p-adic context: " + std::to_string(prime) + " is not prime");
  }
  if (precision < 1) {
    throw InvalidInput("p-adic context: working precision must be >= 1");
  }
  powers_.reserve(static_cast<std::size_t>(precision) + 1);
  mpz_class pk = 1;
  for (int e = 0; e <= precision; ++e) {
    powers_.push_back(pk);
    pk *= prime;
  }
}

bool same_context(const ContextPtr& a, const ContextPtr& b) {
  return a == b || (a && b && *a == *b);
}

} // namespace padic
